#pragma once

#include <tuple>
#include <vector>

#include "nsym/composition.hpp"
#include "nsym/linear_combination.hpp"

namespace nsym {

/// S_alpha * H_s: every right-Pieri successor with coefficient +1.
LinearCombination right_pieri(const Composition& alpha, int s);

/// Undoes a translation by v: returns (alpha - v, beta, gamma - v) on the
/// first length(v) parts. The structure constant is unchanged. Throws
/// InvalidArgument if v is longer than alpha or a part would drop below 1.
std::tuple<Composition, Composition, Composition> translation_reduce(
    const Composition& alpha, const Composition& beta, const Composition& gamma,
    const Composition& v);

/// (-1)^(number of strictly negative entries).
int sgn(const IntVector& d);

/// Row-length vector of a tableau with inner shape (1): `first` is one more
/// than the filled length of row 1, tail[i-1] is the length of the row that
/// starts with entry i (0 if no row does).
struct DeltaVector {
  /// Throws InvalidArgument if first < 1 or a tail entry is negative.
  DeltaVector(int first, IntVector tail);

  /// The outer shape this vector describes: its entries with zeros removed.
  Composition shape() const;
  /// Filled cells in row 1.
  int filled_first_row() const { return first - 1; }

  int first;
  IntVector tail;
};

/// The three threshold conditions characterising row-length vectors of
/// tableaux fixed by every Phi_r. Throws InvalidArgument if the tail length
/// differs from length(beta).
bool z_membership(const DeltaVector& delta, const Composition& beta);

/// Every DeltaVector with first = s + 1 passing z_membership against beta
/// (so its tail sums to |beta| - s).
std::vector<DeltaVector> z_vectors(const Composition& beta, int s);

/// Sum of sgn(beta - tail) over every vector with zeros inserted into the
/// tail of gamma that passes z_membership. Equals C_{(1),beta}^gamma.
Coeff z_signed_sum(const Composition& beta, const Composition& gamma);

/// C_{(1),beta}^gamma from the three-case closed form.
Coeff left_pieri_unit_coefficient(const Composition& beta, const Composition& gamma);

/// H_s * S_beta in the S basis, assembled from left_pieri_unit_coefficient by
/// translating the first part of gamma by s - 1.
LinearCombination left_pieri(int s, const Composition& beta);

}  // namespace nsym
