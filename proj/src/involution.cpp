#include "nsym/involution.hpp"

#include <algorithm>

#include "nsym/errors.hpp"

namespace nsym {

namespace {

void sort_rows(std::vector<SkewTableau::Row>& rows) {
  for (auto& r : rows) std::sort(r.begin(), r.end());
}

}  // namespace

YImage y_map(const SkewTableau& t, const Composition& beta) {
  if (!is_immaculate(t))
    throw InvalidArgument("y_map: tableau is not immaculate: " + t.to_string());
  auto sigma = sigma_of(t, beta);
  if (!sigma)
    throw InvalidArgument("y_map: c(T) - beta + id is not a permutation for " + t.to_string());
  const std::size_t n = beta.length();
  std::vector<SkewTableau::Row> rows(n);
  for (std::size_t i = 0; i < t.row_count(); ++i)
    for (int r : t.row(i)) rows[(*sigma)(r)-1].push_back(static_cast<int>(i) + 1);
  sort_rows(rows);
  return {SkewTableau(Composition{}, std::move(rows)), *sigma};
}

SkewTableau y_inverse(const SkewTableau& image, const Permutation& sigma,
                      const Composition& alpha) {
  if (image.max_entry() > 0 && image.row_count() > sigma.length())
    throw InvalidArgument("y_inverse: image has more rows than sigma has letters");
  const Permutation inv = sigma.inverse();
  std::vector<SkewTableau::Row> rows(alpha.length());
  for (std::size_t i = 0; i < image.row_count(); ++i)
    for (int r : image.row(i)) {
      if (rows.size() < static_cast<std::size_t>(r)) rows.resize(r);
      rows[r - 1].push_back(inv(static_cast<int>(i) + 1));
    }
  sort_rows(rows);
  return SkewTableau(alpha, std::move(rows));
}

bool is_nefarious(const SkewTableau& image, const CellRef& x) {
  if (x.row < 2 || x.column < 1) return false;
  const auto row = image.row(x.row - 1);
  if (static_cast<std::size_t>(x.column) > row.size()) return false;
  const auto above = image.row(x.row - 2);
  if (static_cast<std::size_t>(x.column) > above.size()) return true;
  return above[x.column - 1] >= row[x.column - 1];
}

std::vector<CellRef> nefarious_cells(const SkewTableau& image) {
  if (!image.inner().empty())
    throw InvalidArgument("nefarious_cells: expects a straight-shape tableau");
  std::vector<CellRef> out;
  for (std::size_t i = 1; i < image.row_count(); ++i)
    for (std::size_t c = 1; c <= image.row(i).size(); ++c) {
      CellRef x{static_cast<int>(i) + 1, static_cast<int>(c)};
      if (is_nefarious(image, x)) out.push_back(x);
    }
  return out;
}

std::optional<CellRef> leftmost_nefarious_cell(const SkewTableau& image, int r) {
  if (r < 2) return std::nullopt;
  for (std::size_t c = 1; c <= image.row(r - 1).size(); ++c) {
    CellRef x{r, static_cast<int>(c)};
    if (is_nefarious(image, x)) return x;
  }
  return std::nullopt;
}

SkewTableau theta_x(const SkewTableau& image, const CellRef& x) {
  if (!is_nefarious(image, x))
    throw InvalidArgument("theta_x: cell (" + std::to_string(x.row) + "," +
                          std::to_string(x.column) + ") is not nefarious");
  std::vector<SkewTableau::Row> rows = image.rows();
  const std::size_t lower = static_cast<std::size_t>(x.row) - 1;
  const std::size_t upper = lower - 1;
  const std::size_t c = static_cast<std::size_t>(x.column);  // cells 0..c-1 end at x
  const auto& below = rows[lower];
  const auto& above = rows[upper];
  SkewTableau::Row new_upper, new_lower;
  if (above.size() >= c) {
    // y exists: row above keeps its cells left of y then takes u; row of x
    // keeps its cells through x then takes y and v.
    new_upper.assign(above.begin(), above.begin() + static_cast<std::ptrdiff_t>(c - 1));
    new_upper.insert(new_upper.end(), below.begin() + static_cast<std::ptrdiff_t>(c), below.end());
    new_lower.assign(below.begin(), below.begin() + static_cast<std::ptrdiff_t>(c));
    new_lower.insert(new_lower.end(), above.begin() + static_cast<std::ptrdiff_t>(c - 1), above.end());
  } else {
    new_upper = above;
    new_upper.insert(new_upper.end(), below.begin() + static_cast<std::ptrdiff_t>(c), below.end());
    new_lower.assign(below.begin(), below.begin() + static_cast<std::ptrdiff_t>(c));
  }
  rows[upper] = std::move(new_upper);
  rows[lower] = std::move(new_lower);
  return SkewTableau(image.inner(), std::move(rows));
}

namespace {

/// Y^{-1}(theta_x(y(T)), t_{r-1} . sigma(T)), or nullopt if it changes the
/// first column of T.
std::optional<SkewTableau> swap_through(const SkewTableau& t, const YImage& y,
                                        const CellRef& x) {
  const SkewTableau swapped = theta_x(y.tableau, x);
  const Permutation t_r =
      Permutation::adjacent_transposition(y.sigma.length(), x.row - 1);
  SkewTableau candidate = y_inverse(swapped, t_r.compose(y.sigma), t.inner());
  if (candidate.row_count() != t.row_count()) return std::nullopt;
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    if (t.inner_length(i) != 0) continue;
    const auto a = t.row(i), b = candidate.row(i);
    if (a.empty() != b.empty()) return std::nullopt;
    if (!a.empty() && a.front() != b.front()) return std::nullopt;
  }
  return candidate;
}

}  // namespace

std::optional<CellRef> most_nefarious_cell(const SkewTableau& t, const Composition& beta,
                                           int r) {
  const YImage y = y_map(t, beta);
  if (r < 2 || static_cast<std::size_t>(r) > y.sigma.length()) return std::nullopt;
  for (std::size_t c = 1; c <= y.tableau.row(r - 1).size(); ++c) {
    CellRef x{r, static_cast<int>(c)};
    if (is_nefarious(y.tableau, x) && swap_through(t, y, x)) return x;
  }
  return std::nullopt;
}

SkewTableau phi_r(const SkewTableau& t, const Composition& beta, int r) {
  auto x = most_nefarious_cell(t, beta, r);
  if (!x) return t;
  return *swap_through(t, y_map(t, beta), *x);
}

}  // namespace nsym
