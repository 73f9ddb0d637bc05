#pragma once

#include <cstddef>

#include "nsym/composition.hpp"
#include "nsym/linear_combination.hpp"

namespace nsym {

/// Jacobi-Trudi: s_lambda as the signed sum over S_k of
/// h_{sort(lambda + sigma - id)}, with h_0 = 1 and h_{<0} = 0.
LinearCombination schur_to_h(const Partition& lambda);

/// h-basis combination rewritten in the Schur basis.
LinearCombination h_to_schur(const LinearCombination& f);

/// s_mu * s_nu in the Schur basis, computed through the h basis.
LinearCombination schur_product(const Partition& mu, const Partition& nu);

/// Number of skew semistandard Yamanouchi tableaux of shape lambda/mu and
/// content nu (0 when mu is not contained in lambda or sizes differ).
std::size_t lr_coefficient_tableau(const Partition& mu, const Partition& nu,
                                   const Partition& lambda);

/// Coefficient of s_lambda in schur_product(mu, nu).
Coeff lr_coefficient_algebra(const Partition& mu, const Partition& nu,
                             const Partition& lambda);

/// s_mu * h_n: every horizontal-strip successor with coefficient 1.
LinearCombination pieri_sym(const Partition& mu, int n);

/// (c_{mu nu}^lambda != 0) <=> (c_{N mu, N nu}^{N lambda} != 0) for this
/// instance. Throws InvalidArgument unless |lambda| = |mu| + |nu|.
bool saturation_check_sym(const Partition& mu, const Partition& nu, const Partition& lambda,
                          int n);

/// The same test for immaculate structure constants.
bool saturation_check_nsym(const Composition& alpha, const Composition& beta,
                           const Composition& gamma, int n);

}  // namespace nsym
