#include "nsym/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "nsym/errors.hpp"

namespace nsym {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string index_string(const Composition& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

}  // namespace

Composition parse_composition(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') ||
                        (s.front() == '(' && s.back() == ')'))) {
    s = trim(s.substr(1, s.size() - 2));
  }
  if (s.empty() || s == "0") return Composition{};
  std::vector<int> parts;
  while (true) {
    const auto comma = s.find(',');
    const std::string_view item = trim(s.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InvalidArgument("cannot parse composition '" + std::string(text) + "'");
    if (value <= 0)
      throw InvalidArgument("composition parts must be positive in '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

std::pair<Basis, Composition> parse_basis_element(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidArgument("expected BASIS:parts, got '" + std::string(text) + "'");
  const Basis b = parse_basis(std::string(trim(text.substr(0, colon))));
  Composition c = parse_composition(text.substr(colon + 1));
  if (is_symmetric(b) && !c.is_partition())
    throw InvalidArgument("basis " + to_string(b) + " needs a partition index");
  return {b, std::move(c)};
}

std::string render_text(const LinearCombination& f) {
  if (f.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, c] : f) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    // Magnitude as unsigned so INT64_MIN renders correctly.
    const auto mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (mag != 1) out += std::to_string(mag) + "*";
    out += to_string(f.basis()) + index_string(index);
    first = false;
  }
  return out;
}

std::string render_json(const LinearCombination& f, int indent) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [index, c] : f)
    terms.push_back({{"coefficient", c}, {"index", index.vector()}});
  nlohmann::json j{{"basis", to_string(f.basis())}, {"terms", std::move(terms)}};
  return j.dump(indent);
}

LinearCombination parse_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    LinearCombination out(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms"))
      out.add(Composition(term.at("index").get<std::vector<int>>()),
              term.at("coefficient").get<Coeff>());
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed combination JSON: ") + e.what());
  }
}

std::string render_tableau_text(const SkewTableau& t) {
  std::size_t width = 1;
  for (const auto& r : t.rows())
    for (int v : r) width = std::max(width, std::to_string(v).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    std::vector<std::string> cells(static_cast<std::size_t>(t.inner_length(i)), "X");
    for (int v : t.row(i)) cells.push_back(std::to_string(v));
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) os << ' ';
      os << std::string(width - cells[k].size(), ' ') << cells[k];
    }
    if (cells.empty()) os << '.';
    os << '\n';
  }
  return os.str();
}

std::string render_tableau_latex(const SkewTableau& t) {
  std::ostringstream os;
  os << "\\begin{ytableau}\n";
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    os << "  ";
    std::vector<std::string> cells(static_cast<std::size_t>(t.inner_length(i)), "*(lightgray)");
    for (int v : t.row(i)) cells.push_back(std::to_string(v));
    if (cells.empty()) cells.push_back("\\none");
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? " & " : "") << cells[k];
    os << (i + 1 < t.row_count() ? " \\\\\n" : "\n");
  }
  os << "\\end{ytableau}\n";
  return os.str();
}

std::string render_tableau_json(const SkewTableau& t) {
  nlohmann::json j{{"inner", t.inner().vector()}, {"rows", t.rows()}};
  return j.dump();
}

}  // namespace nsym
