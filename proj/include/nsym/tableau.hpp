#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsym/composition.hpp"
#include "nsym/linear_combination.hpp"

namespace nsym {

/// A filling of the diagram of some composition with the cells of `inner`
/// removed from the upper left.
///
/// Row i holds the filled cells of that row, left to right, starting at
/// column inner_i + 1 (inner_i = 0 past the end of `inner`). Rows past the
/// inner shape may be empty, which straight-shape images of the y-map need;
/// trailing empty rows past the inner shape are dropped so equal fillings
/// compare equal.
class SkewTableau {
 public:
  using Row = std::vector<int>;

  SkewTableau() = default;
  /// Throws InvalidArgument on a non-positive entry.
  SkewTableau(Composition inner, std::vector<Row> rows);

  const Composition& inner() const { return inner_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  /// Filled cells of row i (0-based); empty past the last row.
  std::span<const int> row(std::size_t i) const;
  /// Number of inner cells in row i (0-based).
  int inner_length(std::size_t i) const;

  std::size_t cell_count() const;
  int max_entry() const;
  /// Filled length of every stored row.
  IntVector row_lengths() const;
  /// inner_i + filled length of row i. Throws InvalidArgument when an empty
  /// row sits above a nonempty row past the inner shape, since that is not a
  /// composition.
  Composition outer_shape() const;
  /// Entries of column 1 read top to bottom (rows with no inner cells).
  std::vector<int> first_column() const;

  std::string to_string() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  Composition inner_;
  std::vector<Row> rows_;
};

/// Entries of each row right to left, rows top to bottom.
std::vector<int> reading_word(const SkewTableau& t);

/// Multiplicity of 1..m. Throws InvalidArgument if an entry exceeds m.
IntVector content(const SkewTableau& t, int m);

/// Rows weakly increase and the filled cells of column 1 strictly increase.
bool is_immaculate(const SkewTableau& t);
/// Rows weakly increase and the filled cells of every column strictly
/// increase top to bottom.
bool is_semistandard(const SkewTableau& t);
/// Every prefix has at least as many j as j+1, for every j.
bool is_lattice_word(std::span<const int> word);
bool is_yamanouchi(const SkewTableau& t);

/// Search bound for the tableau enumerators (cells placed).
inline constexpr std::size_t kDefaultSearchBound = 200'000'000;

struct FillingOptions {
  /// Fixed outer shape; otherwise every outer shape is produced.
  std::optional<Composition> outer;
  /// Semistandard (all columns strict) instead of immaculate.
  bool strict_columns = false;
  /// Only fillings with a Yamanouchi reading word.
  bool yamanouchi = false;
  std::size_t max_nodes = kDefaultSearchBound;
};

/// Calls `visit` for every filling of a skew shape with inner shape `inner`
/// using entry j exactly content[j-1] times, in deterministic row-by-row
/// lexicographic order. Throws ResourceLimit past `max_nodes`.
void for_each_filling(const Composition& inner, const IntVector& content,
                      const FillingOptions& options,
                      const std::function<void(const SkewTableau&)>& visit);

std::size_t count_fillings(const Composition& inner, const IntVector& content,
                           const FillingOptions& options);

/// Every skew immaculate tableau with the given inner shape and content,
/// optionally restricted to one outer shape.
std::vector<SkewTableau> enumerate_skew_immaculate(
    const Composition& inner, const IntVector& content,
    const std::optional<Composition>& outer = std::nullopt);

/// Number of skew immaculate Yamanouchi tableaux of shape gamma/alpha with
/// content lambda. Throws InvalidArgument if lambda is not a partition.
std::size_t count_immaculate_LR(const Composition& alpha, const Composition& lambda,
                                const Composition& gamma);

/// sum_gamma count_immaculate_LR(alpha, lambda, gamma) S_gamma.
LinearCombination immaculate_LR_expansion(const Composition& alpha,
                                          const Composition& lambda);

/// A tableau of T_alpha^beta together with sigma(T) = c(T) - beta + id.
struct TableauWithSigma {
  /// Throws InvalidArgument unless sigma == content(tableau) - beta + id.
  TableauWithSigma(SkewTableau tableau, Permutation sigma, const Composition& beta);

  SkewTableau tableau;
  Permutation sigma;
};

/// c(T) - beta + id when that is a permutation of 1..length(beta) (and every
/// entry of T is at most length(beta)), otherwise nullopt.
std::optional<Permutation> sigma_of(const SkewTableau& t, const Composition& beta);

/// Every skew immaculate tableau T with inner shape alpha whose content makes
/// c(T) - beta + id a permutation, grouped by that permutation.
std::vector<TableauWithSigma> enumerate_T_alpha_beta(const Composition& alpha,
                                                     const Composition& beta);
void for_each_T_alpha_beta(const Composition& alpha, const Composition& beta,
                           const std::function<void(const TableauWithSigma&)>& visit);

/// S_alpha * S_beta as the signed sum over S_m of iterated right Pieri
/// steps of sizes beta_j + sigma_j - j.
LinearCombination signed_product(const Composition& alpha, const Composition& beta);

/// The same signed sum evaluated by generating T_alpha^beta directly.
LinearCombination signed_product_by_tableaux(const Composition& alpha,
                                             const Composition& beta);

/// One coefficient of the signed sum, counting fillings of the fixed shape
/// gamma/alpha only.
Coeff signed_coefficient(const Composition& alpha, const Composition& beta,
                         const Composition& gamma);

}  // namespace nsym
