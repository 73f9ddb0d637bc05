#pragma once

// Shared generators for the property tests. Every generator is seeded so a
// failing case reproduces from the test name alone.

#include <random>
#include <vector>

#include "nsym/composition.hpp"
#include "nsym/linear_combination.hpp"

namespace nsym::testing {

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(0x5eed'1234'abcdULL ^ salt);
}

/// Every composition of size at most n, graded-lex.
inline std::vector<Composition> compositions_up_to(int n, std::size_t max_length = 64) {
  std::vector<Composition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& c : compositions_of(k, max_length)) out.push_back(c);
  return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

/// Uniform over compositions of a uniform size in [0, max_size].
inline Composition random_composition(std::mt19937_64& rng, int max_size) {
  const int n = std::uniform_int_distribution<int>(0, max_size)(rng);
  std::vector<int> parts;
  int run = 1;
  // Each of the n-1 gaps is a cut with probability 1/2.
  for (int i = 1; i < n; ++i) {
    if (rng() & 1) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  if (n > 0) parts.push_back(run);
  return Composition(std::move(parts));
}

/// A few terms in `basis` with small nonzero coefficients, all of degree <= max_degree.
inline LinearCombination random_combination(std::mt19937_64& rng, Basis basis, int max_degree,
                                            int terms = 4) {
  LinearCombination f(basis);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < terms; ++t) {
    Composition c = random_composition(rng, max_degree);
    if (is_symmetric(basis)) c = sort(c).composition();
    f.add(c, coeff(rng));
  }
  return f;
}

}  // namespace nsym::testing
