#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsym/algebra.hpp"
#include "nsym/errors.hpp"
#include "nsym/format.hpp"
#include "nsym/involution.hpp"
#include "nsym/pieri.hpp"
#include "nsym/schur.hpp"
#include "nsym/tableau.hpp"
#include "nsym/verify.hpp"

namespace nsym::cli {

namespace {

using Element = std::pair<Basis, Composition>;

void print_combination(std::ostream& out, const LinearCombination& f, const std::string& format) {
  if (format == "json")
    out << render_json(f) << '\n';
  else
    out << render_text(f) << '\n';
}

LinearCombination as_combination(const Element& e) { return {e.first, e.second}; }

bool single_part(const Element& e) {
  return e.second.length() <= 1 && (e.first == Basis::H || e.first == Basis::S);
}

int single_value(const Element& e) { return e.second.empty() ? 0 : e.second[0]; }

LinearCombination product_oracle(const Element& l, const Element& r) {
  const bool lsym = is_symmetric(l.first), rsym = is_symmetric(r.first);
  if (lsym != rsym) throw InvalidArgument("cannot multiply an NSym element by a Sym element");
  if (lsym) {
    auto to_h = [](const Element& e) {
      return e.first == Basis::s ? schur_to_h(Partition(e.second)) : as_combination(e);
    };
    return h_to_schur(sym_multiply(to_h(l), to_h(r)));
  }
  return nsym_multiply(as_combination(l), as_combination(r));
}

LinearCombination product(const Element& l, const Element& r, const std::string& method) {
  if (method == "oracle") return product_oracle(l, r);
  if (l.first != Basis::S && !single_part(l))
    throw InvalidArgument("method " + method + " needs the left factor in S, or a single part");
  if (method == "closed-form") {
    // Left Pieri when the left factor is one row, right Pieri otherwise.
    if (single_part(l) && r.first == Basis::S) return left_pieri(single_value(l), r.second);
    if (l.first == Basis::S && single_part(r)) return right_pieri(l.second, single_value(r));
    throw InvalidArgument("closed-form needs H_s or S_(s) as one factor and S as the other");
  }
  if (r.first != Basis::S || (l.first != Basis::S && !single_part(l)))
    throw InvalidArgument("method " + method + " needs both factors in S");
  // One-row H and S elements coincide, so either basis is accepted on the left.
  if (method == "tableau") return signed_product_by_tableaux(l.second, r.second);
  if (method == "signed") return signed_product(l.second, r.second);
  throw InvalidArgument("unknown method '" + method + "'");
}

LinearCombination convert(const LinearCombination& f, Basis to) {
  const Basis from = f.basis();
  if (from == to) return f;
  if (!is_symmetric(from)) {
    const LinearCombination h = to_H(f);
    switch (to) {
      case Basis::H: return h;
      case Basis::S: return H_to_immaculate(h);
      case Basis::h: return forgetful_chi(h);
      case Basis::s: return h_to_schur(forgetful_chi(h));
    }
  }
  if (!is_symmetric(to)) throw InvalidArgument("cannot lift a Sym element to NSym");
  if (to == Basis::s) return h_to_schur(f);
  LinearCombination out(Basis::h);
  for (const auto& [index, c] : f) out.add_scaled(schur_to_h(Partition(index)), c);
  return out;
}

Coeff coefficient(const Composition& a, const Composition& b, const Composition& g,
                  const std::string& method) {
  if (method == "oracle") return structure_constant(a, b, g);
  if (method == "tableau") {
    if (!b.is_partition())
      throw InvalidArgument("method tableau needs beta to be a partition");
    return static_cast<Coeff>(count_immaculate_LR(a, b, g));
  }
  if (method == "signed") return signed_coefficient(a, b, g);
  if (method == "closed-form") {
    if (a.length() > 1) throw InvalidArgument("method closed-form needs alpha to have one part");
    if (a.empty()) return b == g ? 1 : 0;
    const int shift = a[0] - 1;
    if (g.empty() || g[0] <= shift) return 0;
    std::vector<int> parts = g.vector();
    parts[0] -= shift;
    return left_pieri_unit_coefficient(b, Composition(std::move(parts)));
  }
  throw InvalidArgument("unknown method '" + method + "'");
}

// ------------------------------------------------------------------ tableaux

struct TableauRequest {
  std::string inner, shape;
  std::optional<std::string> content, beta;
  bool yamanouchi = false, semistandard = false, y_map = false;
  std::string format = "text";
  std::size_t limit = 0;
  std::size_t max_nodes = kDefaultSearchBound;
};

struct TableauRecord {
  SkewTableau tableau;
  std::optional<Permutation> sigma;
  std::optional<SkewTableau> image;
};

std::string render_one(const SkewTableau& t, const std::string& format) {
  if (format == "latex") return render_tableau_latex(t);
  if (t.row_count() == 0) return "()\n";
  return render_tableau_text(t);
}

nlohmann::json record_json(const TableauRecord& r) {
  nlohmann::json j = nlohmann::json::parse(render_tableau_json(r.tableau));
  if (r.sigma) j["sigma"] = r.sigma->images();
  if (r.image) j["y_image"] = r.image->rows();
  return j;
}

int cmd_tableaux(const TableauRequest& q, std::ostream& out) {
  const Composition inner = parse_composition(q.inner);
  std::optional<Composition> shape;
  if (!q.shape.empty()) shape = parse_composition(q.shape);
  if (q.content.has_value() == q.beta.has_value())
    throw InvalidArgument("give exactly one of --content and --beta");
  if (q.y_map && !q.beta) throw InvalidArgument("--y-map needs --beta");

  std::vector<TableauRecord> records;
  auto keep = [&](const SkewTableau& t) {
    if (q.yamanouchi && !is_yamanouchi(t)) return false;
    if (q.semistandard && !is_semistandard(t)) return false;
    return true;
  };

  if (q.beta) {
    const Composition beta = parse_composition(*q.beta);
    for_each_T_alpha_beta(inner, beta, [&](const TableauWithSigma& ts) {
      if (shape && ts.tableau.outer_shape() != *shape) return;
      if (!keep(ts.tableau)) return;
      TableauRecord r{ts.tableau, ts.sigma, std::nullopt};
      if (q.y_map) r.image = y_map(ts.tableau, beta).tableau;
      records.push_back(std::move(r));
    });
  } else {
    // Content given as a comma list; zeros are allowed here, unlike compositions.
    IntVector content;
    std::string text = *q.content;
    text.erase(std::remove_if(text.begin(), text.end(),
                              [](char c) { return c == '[' || c == ']' || c == '(' || c == ')'; }),
               text.end());
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item.empty()) continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size() || v < 0) throw InvalidArgument("cannot parse content '" + *q.content + "'");
      content.push_back(v);
    }
    FillingOptions opts;
    opts.max_nodes = q.max_nodes;
    opts.outer = shape;
    opts.strict_columns = q.semistandard;
    opts.yamanouchi = q.yamanouchi;
    for_each_filling(inner, content, opts, [&](const SkewTableau& t) {
      if (!q.semistandard && !is_immaculate(t)) return;
      if (keep(t)) records.push_back({t, std::nullopt, std::nullopt});
    });
  }

  if (q.limit && records.size() > q.limit) records.resize(q.limit);

  if (q.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(record_json(r));
    out << nlohmann::json{{"count", records.size()}, {"tableaux", std::move(arr)}}.dump() << '\n';
    return kSuccess;
  }
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    if (q.format == "latex") {
      out << "% tableau " << k + 1;
      if (r.sigma) out << ", sigma = " << r.sigma->to_string();
      out << '\n' << render_one(r.tableau, "latex");
      if (r.image) out << "% y-map image\n" << render_one(*r.image, "latex");
    } else {
      out << "# tableau " << k + 1;
      if (r.sigma) out << "  sigma=" << r.sigma->to_string();
      out << '\n' << render_one(r.tableau, "text");
      if (r.image) out << "# y-map image\n" << render_one(*r.image, "text");
    }
    out << '\n';
  }
  out << "count: " << records.size() << '\n';
  return kSuccess;
}

// -------------------------------------------------------------------- verify

int print_reports(const std::vector<SweepReport>& reports, const std::vector<double>& seconds,
                  const std::string& format, std::ostream& out) {
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      arr.push_back({{"suite", r.suite},
                     {"passed", r.passed},
                     {"checked", r.checked},
                     {"counterexample", r.counterexample},
                     {"notes", r.notes},
                     {"seconds", seconds[i]}});
    }
    out << nlohmann::json{{"passed", all}, {"suites", std::move(arr)}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(2);
      t << seconds[i];
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << "  checked=" << r.checked
          << "  time=" << t.str() << "s\n";
      if (!r.passed) out << "  counterexample: " << r.counterexample << '\n';
      for (const auto& n : r.notes) out << "  " << n << '\n';
    }
  }
  return all ? kSuccess : kVerificationFailure;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw InvalidArgument("format '" + format + "' is not available for this command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for the immaculate basis of NSym", "nsym"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::vector<std::string> methods{"oracle", "tableau", "signed", "closed-form"};

  // product
  std::string left, right, method = "oracle", format = "text", basis = "S";
  auto* product_cmd = app.add_subcommand("product", "Multiply two basis elements, e.g. S:2 and S:2,4");
  product_cmd->add_option("--left,-l", left, "Left factor BASIS:parts")->required();
  product_cmd->add_option("--right,-r", right, "Right factor BASIS:parts")->required();
  product_cmd->add_option("--method,-m", method, "oracle | tableau | signed | closed-form")
      ->check(CLI::IsMember(methods));
  product_cmd->add_option("--basis", basis, "Output basis for NSym products (S or H)");
  product_cmd->add_option("--format,-f", format, "text | json");

  // convert
  std::string element, json_input, target;
  auto* convert_cmd = app.add_subcommand("convert", "Rewrite an element in another basis");
  convert_cmd->add_option("element", element, "BASIS:parts");
  convert_cmd->add_option("--json", json_input, "Combination in the JSON schema instead");
  convert_cmd->add_option("--to,-t", target, "Target basis H, S, h or s")->required();
  convert_cmd->add_option("--format,-f", format, "text | json");

  // coeff
  std::string a_text, b_text, g_text;
  auto* coeff_cmd = app.add_subcommand("coeff", "One structure constant C_{alpha,beta}^gamma");
  coeff_cmd->add_option("--alpha,-a", a_text, "alpha")->required();
  coeff_cmd->add_option("--beta,-b", b_text, "beta")->required();
  coeff_cmd->add_option("--gamma,-g", g_text, "gamma")->required();
  coeff_cmd->add_option("--method,-m", method, "oracle | tableau | signed | closed-form")
      ->check(CLI::IsMember(methods));

  // right-pieri / left-pieri
  int step = 0;
  auto* rp_cmd = app.add_subcommand("right-pieri", "S_alpha * H_s");
  rp_cmd->add_option("--alpha,-a", a_text, "alpha")->required();
  rp_cmd->add_option("-s,--step", step, "s")->required()->check(CLI::NonNegativeNumber);
  rp_cmd->add_option("--format,-f", format, "text | json");
  auto* lp_cmd = app.add_subcommand("left-pieri", "H_s * S_beta");
  lp_cmd->add_option("-s,--step", step, "s")->required()->check(CLI::NonNegativeNumber);
  lp_cmd->add_option("--beta,-b", b_text, "beta")->required();
  lp_cmd->add_option("--format,-f", format, "text | json");

  // tableaux
  TableauRequest tq;
  auto* tab_cmd = app.add_subcommand("tableaux", "List skew immaculate tableaux");
  tab_cmd->add_option("--inner,-i", tq.inner, "Inner shape (default empty)");
  tab_cmd->add_option("--content,-c", tq.content, "Number of each entry 1, 2, ...");
  tab_cmd->add_option("--beta,-b", tq.beta, "List T_alpha^beta with sigma instead");
  tab_cmd->add_option("--shape,-s", tq.shape, "Keep one outer shape");
  tab_cmd->add_flag("--yamanouchi", tq.yamanouchi, "Yamanouchi reading word only");
  tab_cmd->add_flag("--semistandard", tq.semistandard, "Strict columns instead of immaculate");
  tab_cmd->add_flag("--y-map", tq.y_map, "Also print y(T); needs --beta");
  tab_cmd->add_option("--limit", tq.limit, "Print at most this many");
  tab_cmd->add_option("--max-nodes", tq.max_nodes, "Search bound in placed cells");
  tab_cmd->add_option("--format,-f", tq.format, "text | latex | json");

  // verify
  std::string suite = "all";
  SweepOptions sweep;
  std::optional<int> max_size;
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification sweep");
  verify_cmd->add_option("--suite", suite, "Suite name or 'all'");
  verify_cmd->add_option("--max-size", max_size, "Degree cap (default NSYM_MAX_DEGREE or 7)");
  verify_cmd->add_option("--max-length", sweep.max_length, "Cap on length(beta)");
  verify_cmd->add_option("--max-step", sweep.max_step, "Largest Pieri step");
  verify_cmd->add_option("--threads", sweep.threads, "Worker threads, 0 for all cores");
  verify_cmd->add_option("--format,-f", format, "text | json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*product_cmd) {
      check_format(format, {"text", "json"});
      const Element l = parse_basis_element(left), r = parse_basis_element(right);
      LinearCombination result = product(l, r, method);
      const Basis want = parse_basis(basis);
      if (!is_symmetric(result.basis()) && want != result.basis()) result = convert(result, want);
      print_combination(out, result, format);
    } else if (*convert_cmd) {
      check_format(format, {"text", "json"});
      if (element.empty() == json_input.empty())
        throw InvalidArgument("give an element or --json, not both");
      const LinearCombination f =
          element.empty() ? parse_json(json_input) : as_combination(parse_basis_element(element));
      print_combination(out, convert(f, parse_basis(target)), format);
    } else if (*coeff_cmd) {
      out << coefficient(parse_composition(a_text), parse_composition(b_text),
                         parse_composition(g_text), method)
          << '\n';
    } else if (*rp_cmd) {
      check_format(format, {"text", "json"});
      print_combination(out, right_pieri(parse_composition(a_text), step), format);
    } else if (*lp_cmd) {
      check_format(format, {"text", "json"});
      print_combination(out, left_pieri(step, parse_composition(b_text)), format);
    } else if (*tab_cmd) {
      check_format(tq.format, {"text", "latex", "json"});
      return cmd_tableaux(tq, out);
    } else if (*verify_cmd) {
      check_format(format, {"text", "json"});
      sweep.max_size = max_size ? *max_size : default_max_size();
      if (sweep.max_size < 0) throw InvalidArgument("--max-size must be nonnegative");
      std::vector<std::string> names;
      if (suite == "all")
        names = suite_names();
      else
        names.push_back(suite);
      std::vector<SweepReport> reports;
      std::vector<double> seconds;
      for (const auto& name : names) {
        const auto t0 = std::chrono::steady_clock::now();
        reports.push_back(run_suite(name, sweep));
        seconds.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      }
      return print_reports(reports, seconds, format, out);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

}  // namespace nsym::cli
