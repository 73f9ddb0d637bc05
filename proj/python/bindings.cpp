#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "nsym/algebra.hpp"
#include "nsym/errors.hpp"
#include "nsym/format.hpp"
#include "nsym/involution.hpp"
#include "nsym/pieri.hpp"
#include "nsym/schur.hpp"
#include "nsym/tableau.hpp"
#include "nsym/verify.hpp"

namespace py = pybind11;
using namespace nsym;

namespace {

using Parts = std::vector<int>;
using Rows = std::vector<SkewTableau::Row>;

Composition to_comp(const Parts& p) { return Composition(p); }

py::tuple as_tuple(const Composition& c) {
  py::tuple t(c.length());
  for (std::size_t i = 0; i < c.length(); ++i) t[i] = c[i];
  return t;
}

// Terms keyed by index tuples, inserted in graded-lex order.
py::dict as_dict(const LinearCombination& f) {
  py::dict d;
  for (const auto& [index, coeff] : f) d[as_tuple(index)] = coeff;
  return d;
}

LinearCombination from_dict(Basis basis, const py::dict& terms) {
  LinearCombination f(basis);
  for (const auto& [k, v] : terms) f.add(to_comp(k.cast<Parts>()), v.cast<Coeff>());
  return f;
}

py::dict tableau_dict(const SkewTableau& t) {
  py::dict d;
  d["inner"] = as_tuple(t.inner());
  d["rows"] = t.rows();
  return d;
}

SkewTableau tableau(const Parts& inner, const Rows& rows) { return SkewTableau(to_comp(inner), rows); }

LinearCombination product_S(const Parts& alpha, const Parts& beta, const std::string& method) {
  if (method == "oracle") return product_in_S_oracle(to_comp(alpha), to_comp(beta));
  if (method == "signed") return signed_product(to_comp(alpha), to_comp(beta));
  if (method == "tableau") return signed_product_by_tableaux(to_comp(alpha), to_comp(beta));
  if (method == "closed-form") {
    if (alpha.size() == 1) return left_pieri(alpha[0], to_comp(beta));
    if (alpha.empty()) return LinearCombination(Basis::S, to_comp(beta));
    throw InvalidArgument("closed-form needs alpha with at most one part");
  }
  throw InvalidArgument("unknown method: " + method);
}

py::dict report_dict(const SweepReport& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["passed"] = r.passed;
  d["checked"] = r.checked;
  d["counterexample"] = r.counterexample;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_nsym, m) {
  m.doc() = "Immaculate functions in the noncommutative symmetric functions";

  static py::exception<ResourceLimit> resource_limit(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const ResourceLimit& e) {
      py::set_error(resource_limit, e.what());
    }
  });

  m.def(
      "product", [](const Parts& a, const Parts& b, const std::string& method) {
        return as_dict(product_S(a, b, method));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("method") = "oracle",
      "S_alpha * S_beta in the immaculate basis as {index: coefficient}.");
  m.def(
      "structure_constant",
      [](const Parts& a, const Parts& b, const Parts& g, const std::string& method) -> Coeff {
        if (method == "oracle") return structure_constant(to_comp(a), to_comp(b), to_comp(g));
        if (method == "signed") return signed_coefficient(to_comp(a), to_comp(b), to_comp(g));
        if (method == "tableau")
          return static_cast<Coeff>(count_immaculate_LR(to_comp(a), to_comp(b), to_comp(g)));
        throw InvalidArgument("unknown method: " + method);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("method") = "oracle",
      "Coefficient of S_gamma in S_alpha * S_beta.");
  m.def(
      "right_pieri", [](const Parts& a, int s) { return as_dict(right_pieri(to_comp(a), s)); },
      py::arg("alpha"), py::arg("s"));
  m.def(
      "left_pieri", [](int s, const Parts& b) { return as_dict(left_pieri(s, to_comp(b))); },
      py::arg("s"), py::arg("beta"));
  m.def(
      "left_pieri_unit_coefficient",
      [](const Parts& b, const Parts& g) { return left_pieri_unit_coefficient(to_comp(b), to_comp(g)); },
      py::arg("beta"), py::arg("gamma"), "Coefficient of S_gamma in S_1 * S_beta.");
  m.def(
      "sgn", [](const IntVector& d) { return sgn(d); }, py::arg("vector"));
  m.def(
      "immaculate_to_H", [](const Parts& a) { return as_dict(immaculate_to_H(to_comp(a))); },
      py::arg("alpha"));
  m.def(
      "convert",
      [](const std::string& from, const py::dict& terms, const std::string& to) {
        const Basis src = parse_basis(from), dst = parse_basis(to);
        const LinearCombination f = from_dict(src, terms);
        if (src == dst) return as_dict(f);
        if (!is_symmetric(src)) {
          const LinearCombination h = to_H(f);
          switch (dst) {
            case Basis::H: return as_dict(h);
            case Basis::S: return as_dict(H_to_immaculate(h));
            case Basis::h: return as_dict(forgetful_chi(h));
            case Basis::s: return as_dict(h_to_schur(forgetful_chi(h)));
          }
        }
        if (dst == Basis::s) return as_dict(h_to_schur(f));
        if (dst == Basis::h) {
          LinearCombination out(Basis::h);
          for (const auto& [index, c] : f) out.add_scaled(schur_to_h(Partition(index)), c);
          return as_dict(out);
        }
        throw InvalidArgument("cannot lift a Sym element to NSym");
      },
      py::arg("basis"), py::arg("terms"), py::arg("to"),
      "Rewrites {index: coefficient} from one basis (H, S, h, s) into another.");
  m.def(
      "render_text",
      [](const std::string& basis, const py::dict& terms) {
        return render_text(from_dict(parse_basis(basis), terms));
      },
      py::arg("basis"), py::arg("terms"));
  m.def(
      "render_json",
      [](const std::string& basis, const py::dict& terms) {
        return render_json(from_dict(parse_basis(basis), terms));
      },
      py::arg("basis"), py::arg("terms"));
  m.def(
      "lr_coefficient",
      [](const Parts& mu, const Parts& nu, const Parts& lambda) {
        return lr_coefficient_tableau(Partition(mu), Partition(nu), Partition(lambda));
      },
      py::arg("mu"), py::arg("nu"), py::arg("lam"));
  m.def(
      "schur_to_h", [](const Parts& lambda) { return as_dict(schur_to_h(Partition(lambda))); },
      py::arg("lam"));

  m.def(
      "skew_immaculate_tableaux",
      [](const Parts& inner, const IntVector& content, std::optional<Parts> outer) {
        std::optional<Composition> o;
        if (outer) o = to_comp(*outer);
        py::list out;
        for (const auto& t : enumerate_skew_immaculate(to_comp(inner), content, o))
          out.append(tableau_dict(t));
        return out;
      },
      py::arg("inner"), py::arg("content"), py::arg("outer") = py::none());
  m.def(
      "T_alpha_beta",
      [](const Parts& alpha, const Parts& beta) {
        py::list out;
        for (const auto& ts : enumerate_T_alpha_beta(to_comp(alpha), to_comp(beta))) {
          py::dict d = tableau_dict(ts.tableau);
          d["sigma"] = ts.sigma.images();
          out.append(d);
        }
        return out;
      },
      py::arg("alpha"), py::arg("beta"),
      "Tableaux with inner shape alpha whose content minus beta plus id is a permutation.");
  m.def(
      "y_map",
      [](const Parts& inner, const Rows& rows, const Parts& beta) {
        const auto img = y_map(tableau(inner, rows), to_comp(beta));
        py::dict d = tableau_dict(img.tableau);
        d["sigma"] = img.sigma.images();
        return d;
      },
      py::arg("inner"), py::arg("rows"), py::arg("beta"));
  m.def(
      "phi_r",
      [](const Parts& inner, const Rows& rows, const Parts& beta, int r) {
        return tableau_dict(phi_r(tableau(inner, rows), to_comp(beta), r));
      },
      py::arg("inner"), py::arg("rows"), py::arg("beta"), py::arg("r"));
  m.def(
      "render_tableau",
      [](const Parts& inner, const Rows& rows, const std::string& format) {
        const auto t = tableau(inner, rows);
        if (format == "text") return render_tableau_text(t);
        if (format == "latex") return render_tableau_latex(t);
        if (format == "json") return render_tableau_json(t);
        throw InvalidArgument("unknown format: " + format);
      },
      py::arg("inner"), py::arg("rows"), py::arg("format") = "text");

  m.def("suite_names", &suite_names);
  m.def("default_max_size", &default_max_size);
  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> max_size, std::size_t max_length,
         int max_step, unsigned threads) {
        SweepOptions opts;
        opts.max_size = max_size.value_or(default_max_size());
        opts.max_length = max_length;
        opts.max_step = max_step;
        opts.threads = threads;
        SweepReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, opts);
        }
        return report_dict(r);
      },
      py::arg("suite"), py::arg("max_size") = py::none(), py::arg("max_length") = 4,
      py::arg("max_step") = 4, py::arg("threads") = 0);
}
