#include "nsym/schur.hpp"

#include "nsym/algebra.hpp"
#include "nsym/errors.hpp"
#include "nsym/tableau.hpp"

namespace nsym {

LinearCombination schur_to_h(const Partition& lambda) {
  const int k = static_cast<int>(lambda.length());
  LinearCombination out(Basis::h);
  std::vector<int> index;
  for (const Permutation& sigma : permutations(k)) {
    index.clear();
    bool dead = false;
    for (int i = 0; i < k; ++i) {
      const int v = lambda[i] + sigma.images()[i] - (i + 1);
      if (v < 0) {
        dead = true;
        break;
      }
      if (v > 0) index.push_back(v);
    }
    if (!dead) out.add(sort(Composition(index)), sigma.sign());
  }
  return out;
}

LinearCombination h_to_schur(const LinearCombination& f) {
  if (f.basis() != Basis::h) throw InvalidArgument("h_to_schur: expected basis h");
  return triangular_invert(f, Basis::s,
                           [](const Composition& l) { return schur_to_h(Partition(l)); });
}

LinearCombination schur_product(const Partition& mu, const Partition& nu) {
  return h_to_schur(sym_multiply(schur_to_h(mu), schur_to_h(nu)));
}

std::size_t lr_coefficient_tableau(const Partition& mu, const Partition& nu,
                                   const Partition& lambda) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (mu.length() > lambda.length()) return 0;
  for (std::size_t i = 0; i < mu.length(); ++i)
    if (mu[i] > lambda[i]) return 0;
  FillingOptions opts;
  opts.outer = lambda.composition();
  opts.strict_columns = true;
  opts.yamanouchi = true;
  return count_fillings(mu, nu.composition().vector(), opts);
}

Coeff lr_coefficient_algebra(const Partition& mu, const Partition& nu,
                             const Partition& lambda) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  return schur_product(mu, nu).coefficient(lambda);
}

LinearCombination pieri_sym(const Partition& mu, int n) {
  LinearCombination out(Basis::s);
  for (const auto& nu : horizontal_strip_successors(mu, n)) out.add(nu, 1);
  return out;
}

bool saturation_check_sym(const Partition& mu, const Partition& nu, const Partition& lambda,
                          int n) {
  if (lambda.size() != mu.size() + nu.size())
    throw InvalidArgument("saturation_check_sym: |lambda| != |mu| + |nu|");
  const bool base = lr_coefficient_tableau(mu, nu, lambda) != 0;
  const bool scaled =
      lr_coefficient_tableau(Partition(scale(mu, n)), Partition(scale(nu, n)),
                             Partition(scale(lambda, n))) != 0;
  return base == scaled;
}

bool saturation_check_nsym(const Composition& alpha, const Composition& beta,
                           const Composition& gamma, int n) {
  if (gamma.size() != alpha.size() + beta.size())
    throw InvalidArgument("saturation_check_nsym: |gamma| != |alpha| + |beta|");
  const bool base = structure_constant(alpha, beta, gamma) != 0;
  const bool scaled =
      structure_constant(scale(alpha, n), scale(beta, n), scale(gamma, n)) != 0;
  return base == scaled;
}

}  // namespace nsym
