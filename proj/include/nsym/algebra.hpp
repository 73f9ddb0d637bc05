#pragma once

#include <stdexcept>

#include "nsym/errors.hpp"
#include "nsym/linear_combination.hpp"

namespace nsym {

/// Bilinear extension of H_a * H_b = H_{a.b} (concatenation).
LinearCombination h_multiply(const LinearCombination& f, const LinearCombination& g);

/// Bilinear extension of h_l * h_m = h_{sort(l.m)}.
LinearCombination sym_multiply(const LinearCombination& f, const LinearCombination& g);

/// The forgetful projection NSym -> Sym, H_a -> h_{sort(a)}.
LinearCombination forgetful_chi(const LinearCombination& f);

/// Expansion of the immaculate function S_alpha in the H basis: the signed
/// sum over S_k of H_{alpha + sigma - id}, where an index entry equal to 0 is
/// deleted and an index with a negative entry kills the term.
LinearCombination immaculate_to_H(const Composition& alpha);

/// Inverse of immaculate_to_H, extended linearly.
LinearCombination H_to_immaculate(const LinearCombination& f);

/// S-basis element or H-basis combination, returned in the H basis.
LinearCombination to_H(const LinearCombination& f);

/// Product of two NSym elements given in H or S; result in the S basis.
LinearCombination nsym_multiply(const LinearCombination& f, const LinearCombination& g);

/// S_alpha * S_beta expanded in S by way of the H basis. This is the ground
/// truth every other product route is compared against.
LinearCombination product_in_S_oracle(const Composition& alpha, const Composition& beta);

/// Coefficient of S_gamma in S_alpha * S_beta.
Coeff structure_constant(const Composition& alpha, const Composition& beta,
                         const Composition& gamma);

/// Unitriangular elimination shared by the H -> S and h -> s conversions.
///
/// `expand(index)` must return a combination in `source`'s basis whose
/// graded-lex smallest term is `index` with coefficient 1. The result is the
/// unique combination sum c_i e_i in `target` with sum c_i expand(i) == source.
template <class Expand>
LinearCombination triangular_invert(LinearCombination source, Basis target, Expand expand) {
  LinearCombination out(target);
  while (!source.empty()) {
    const auto [index, coeff] = *source.begin();
    LinearCombination row = expand(index);
    if (row.empty() || row.begin()->first != index || row.begin()->second != 1)
      throw std::logic_error("triangular_invert: expansion of " + index.to_string() +
                             " is not unitriangular");
    out.add(index, coeff);
    source.add_scaled(row, -coeff);
  }
  return out;
}

}  // namespace nsym
