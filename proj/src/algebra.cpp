#include "nsym/algebra.hpp"

#include <vector>

namespace nsym {

namespace {

void require_basis(const LinearCombination& f, Basis b, const char* op) {
  if (f.basis() != b)
    throw InvalidArgument(std::string(op) + ": expected basis " + to_string(b) +
                          ", got " + to_string(f.basis()));
}

std::vector<int> concat(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.vector();
  parts.insert(parts.end(), b.begin(), b.end());
  return parts;
}

}  // namespace

LinearCombination h_multiply(const LinearCombination& f, const LinearCombination& g) {
  require_basis(f, Basis::H, "h_multiply");
  require_basis(g, Basis::H, "h_multiply");
  LinearCombination out(Basis::H);
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add(Composition(concat(a, b)), checked_mul(ca, cb));
  return out;
}

LinearCombination sym_multiply(const LinearCombination& f, const LinearCombination& g) {
  require_basis(f, Basis::h, "sym_multiply");
  require_basis(g, Basis::h, "sym_multiply");
  LinearCombination out(Basis::h);
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g)
      out.add(sort(Composition(concat(a, b))), checked_mul(ca, cb));
  return out;
}

LinearCombination forgetful_chi(const LinearCombination& f) {
  require_basis(f, Basis::H, "forgetful_chi");
  LinearCombination out(Basis::h);
  for (const auto& [a, c] : f) out.add(sort(a), c);
  return out;
}

LinearCombination immaculate_to_H(const Composition& alpha) {
  const int k = static_cast<int>(alpha.length());
  LinearCombination out(Basis::H);
  std::vector<int> index;
  index.reserve(k);
  for (const Permutation& sigma : permutations(k)) {
    index.clear();
    bool dead = false;
    for (int i = 0; i < k; ++i) {
      const int v = alpha[i] + sigma.images()[i] - (i + 1);
      if (v < 0) {
        dead = true;
        break;
      }
      if (v > 0) index.push_back(v);
    }
    if (!dead) out.add(Composition(index), sigma.sign());
  }
  return out;
}

LinearCombination H_to_immaculate(const LinearCombination& f) {
  require_basis(f, Basis::H, "H_to_immaculate");
  return triangular_invert(f, Basis::S, [](const Composition& g) { return immaculate_to_H(g); });
}

LinearCombination to_H(const LinearCombination& f) {
  if (f.basis() == Basis::H) return f;
  require_basis(f, Basis::S, "to_H");
  LinearCombination out(Basis::H);
  for (const auto& [a, c] : f) out.add_scaled(immaculate_to_H(a), c);
  return out;
}

LinearCombination nsym_multiply(const LinearCombination& f, const LinearCombination& g) {
  return H_to_immaculate(h_multiply(to_H(f), to_H(g)));
}

LinearCombination product_in_S_oracle(const Composition& alpha, const Composition& beta) {
  if (alpha.length() + beta.length() > static_cast<std::size_t>(kMaxPermutationLength))
    throw ResourceLimit("product oracle: combined length " +
                        std::to_string(alpha.length() + beta.length()) +
                        " exceeds the permutation guard");
  return H_to_immaculate(h_multiply(immaculate_to_H(alpha), immaculate_to_H(beta)));
}

Coeff structure_constant(const Composition& alpha, const Composition& beta,
                         const Composition& gamma) {
  if (gamma.size() != alpha.size() + beta.size()) return 0;
  return product_in_S_oracle(alpha, beta).coefficient(gamma);
}

}  // namespace nsym
