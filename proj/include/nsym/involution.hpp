#pragma once

#include <optional>
#include <vector>

#include "nsym/composition.hpp"
#include "nsym/tableau.hpp"

namespace nsym {

/// A cell by 1-based row and absolute 1-based column.
struct CellRef {
  int row;
  int column;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

/// y(T) together with sigma(T).
struct YImage {
  SkewTableau tableau;
  Permutation sigma;
};

/// For every entry r in row i of T, puts an entry i in row sigma(T)(r) of a
/// straight-shape tableau; rows are sorted. Empty rows are kept.
/// Throws InvalidArgument unless T belongs to T_alpha^beta.
YImage y_map(const SkewTableau& t, const Composition& beta);

/// The reversed construction: for every entry r in row i of `image`, puts
/// an entry sigma^{-1}(i) in row r of a tableau with inner shape `alpha`.
/// Rows are sorted; the result need not be immaculate.
SkewTableau y_inverse(const SkewTableau& image, const Permutation& sigma,
                      const Composition& alpha);

/// Cells outside row 1 whose upper neighbour is missing or holds a value
/// >= their own, in row-major order. `image` must have straight shape.
std::vector<CellRef> nefarious_cells(const SkewTableau& image);

bool is_nefarious(const SkewTableau& image, const CellRef& x);

/// The two-row tail swap pivoting on x: with y the cell above x, the cells
/// right of x go up and the cells from y on come down; when there is no y
/// only the cells right of x move up. Throws InvalidArgument unless x is
/// nefarious.
SkewTableau theta_x(const SkewTableau& image, const CellRef& x);

/// The nefarious cells of row r of y(T), scanned left to right, first one
/// for which Y^{-1} . Theta_x . Y keeps T's first column; nullopt if none.
std::optional<CellRef> most_nefarious_cell(const SkewTableau& t, const Composition& beta,
                                           int r);

/// Left-most nefarious cell in row r of `image`.
std::optional<CellRef> leftmost_nefarious_cell(const SkewTableau& image, int r);

/// Phi_r(T): Y^{-1}(theta_x(y(T)), t_{r-1} . sigma(T)) for the most
/// nefarious cell x in row r, or T itself if row r has none.
SkewTableau phi_r(const SkewTableau& t, const Composition& beta, int r);

}  // namespace nsym
