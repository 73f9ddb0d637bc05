#include "nsym/pieri.hpp"

#include <functional>
#include <numeric>
#include <set>

#include "nsym/errors.hpp"

namespace nsym {

LinearCombination right_pieri(const Composition& alpha, int s) {
  LinearCombination out(Basis::S);
  for (const auto& beta : right_pieri_successors(alpha, s)) out.add(beta, 1);
  return out;
}

std::tuple<Composition, Composition, Composition> translation_reduce(
    const Composition& alpha, const Composition& beta, const Composition& gamma,
    const Composition& v) {
  if (v.length() > alpha.length())
    throw InvalidArgument("translation_reduce: length(v) exceeds length(alpha)");
  if (v.length() > gamma.length())
    throw InvalidArgument("translation_reduce: length(v) exceeds length(gamma)");
  auto subtract = [&](const Composition& x) {
    std::vector<int> parts = x.vector();
    for (std::size_t i = 0; i < v.length(); ++i) {
      parts[i] -= v[i];
      if (parts[i] < 1)
        throw InvalidArgument("translation_reduce: " + x.to_string() + " - " +
                              v.to_string() + " has a nonpositive part");
    }
    return Composition(std::move(parts));
  };
  return {subtract(alpha), beta, subtract(gamma)};
}

int sgn(const IntVector& d) {
  int negatives = 0;
  for (int x : d)
    if (x < 0) ++negatives;
  return negatives % 2 == 0 ? 1 : -1;
}

DeltaVector::DeltaVector(int first_, IntVector tail_) : first(first_), tail(std::move(tail_)) {
  if (first < 1) throw InvalidArgument("DeltaVector: first entry must be positive");
  for (int d : tail)
    if (d < 0) throw InvalidArgument("DeltaVector: negative tail entry");
}

Composition DeltaVector::shape() const {
  IntVector all{first};
  all.insert(all.end(), tail.begin(), tail.end());
  return comp(all);
}

namespace {

enum class Verdict { Fail, Pass, PassIfRestMatches };

/// Condition at index i (0-based) given the prefix sums of delta and beta
/// over j < i. The "rest matches" clause is reported, not checked.
Verdict z_condition(int s, int beta_i, int delta_i, int sum_delta_before,
                    int sum_beta_before) {
  const int threshold = s + sum_delta_before - sum_beta_before;
  if (beta_i < threshold) return beta_i < delta_i ? Verdict::Pass : Verdict::Fail;
  if (beta_i > threshold) {
    const int lower = sum_beta_before + beta_i - sum_delta_before - s;
    return (beta_i >= delta_i && delta_i >= lower) ? Verdict::Pass : Verdict::Fail;
  }
  if (beta_i < delta_i) return Verdict::Pass;
  return delta_i == 0 ? Verdict::PassIfRestMatches : Verdict::Fail;
}

}  // namespace

bool z_membership(const DeltaVector& delta, const Composition& beta) {
  const std::size_t n = beta.length();
  if (delta.tail.size() != n)
    throw InvalidArgument("z_membership: tail length differs from length(beta)");
  const int s = delta.filled_first_row();
  int sum_delta = 0, sum_beta = 0;
  for (std::size_t i = 0; i < n; ++i) {
    switch (z_condition(s, beta[i], delta.tail[i], sum_delta, sum_beta)) {
      case Verdict::Fail:
        return false;
      case Verdict::PassIfRestMatches:
        for (std::size_t j = i + 1; j < n; ++j)
          if (beta[j] != delta.tail[j]) return false;
        break;
      case Verdict::Pass:
        break;
    }
    sum_delta += delta.tail[i];
    sum_beta += beta[i];
  }
  return true;
}

std::vector<DeltaVector> z_vectors(const Composition& beta, int s) {
  std::vector<DeltaVector> out;
  const int total = beta.size() - s;
  if (s < 0 || total < 0) return out;
  const std::size_t n = beta.length();
  IntVector tail(n, 0);
  std::function<void(std::size_t, int, int)> go = [&](std::size_t i, int sum_delta,
                                                        int sum_beta) {
    if (i == n) {
      if (sum_delta == total) out.emplace_back(s + 1, tail);
      return;
    }
    for (int d = 0; d <= total - sum_delta; ++d) {
      const Verdict v = z_condition(s, beta[i], d, sum_delta, sum_beta);
      if (v == Verdict::Fail) continue;
      tail[i] = d;
      if (v == Verdict::PassIfRestMatches) {
        int sum = sum_delta + d;
        for (std::size_t j = i + 1; j < n; ++j) {
          tail[j] = beta[j];
          sum += beta[j];
        }
        if (sum == total) out.emplace_back(s + 1, tail);
        continue;
      }
      go(i + 1, sum_delta + d, sum_beta + beta[i]);
    }
    tail[i] = 0;
  };
  go(0, 0, 0);
  return out;
}

namespace {

IntVector difference(const Composition& beta, const IntVector& tail, std::size_t upto) {
  IntVector d;
  for (std::size_t i = 0; i < upto; ++i) d.push_back(beta[i] - tail[i]);
  return d;
}

}  // namespace

Coeff z_signed_sum(const Composition& beta, const Composition& gamma) {
  const std::size_t n = beta.length();
  if (gamma.size() != beta.size() + 1 || gamma.empty()) return 0;
  if (gamma.length() > n + 1 || gamma.length() + 0 < 1) return 0;
  const std::size_t zeros = n + 1 - gamma.length();
  // Choose which tail positions hold zeros; the rest of gamma fills the
  // remaining positions in order.
  Coeff total = 0;
  std::vector<bool> is_zero(n, false);
  std::fill(is_zero.end() - static_cast<std::ptrdiff_t>(zeros), is_zero.end(), true);
  do {
    IntVector tail(n);
    std::size_t next = 1;
    for (std::size_t i = 0; i < n; ++i) tail[i] = is_zero[i] ? 0 : gamma[next++];
    DeltaVector delta(gamma[0], tail);
    if (z_membership(delta, beta)) total += sgn(difference(beta, tail, n));
  } while (std::next_permutation(is_zero.begin(), is_zero.end()));
  return total;
}

Coeff left_pieri_unit_coefficient(const Composition& beta, const Composition& gamma) {
  const std::size_t n = beta.length();
  if (gamma.size() != beta.size() + 1) return 0;
  if (gamma.length() == n + 1) {
    IntVector tail(gamma.begin() + 1, gamma.end());
    if (!z_membership(DeltaVector(gamma[0], tail), beta)) return 0;
    return sgn(difference(beta, tail, n));
  }
  if (gamma.length() == n && n > 0) {
    // k: smallest index (1-based) with beta_j == gamma_j for every j > k.
    std::size_t k = n;
    while (k > 1 && beta[k - 1] == gamma[k - 1]) --k;
    // r: largest index with beta_j < beta_{j+1} for k <= j < r.
    std::size_t r = k;
    while (r < n && beta[r - 1] < beta[r]) ++r;
    IntVector tail(n);
    for (std::size_t i = 1; i <= n; ++i) {
      if (i < k) tail[i - 1] = gamma[i];
      else if (i == k) tail[i - 1] = 0;
      else tail[i - 1] = gamma[i - 1];
    }
    if (!z_membership(DeltaVector(gamma[0], tail), beta)) return 0;
    if ((r - k) % 2 != 0) return 0;
    return sgn(difference(beta, tail, k - 1));
  }
  return 0;
}

LinearCombination left_pieri(int s, const Composition& beta) {
  if (s < 1) throw InvalidArgument("left_pieri: s must be positive");
  std::set<Composition> support;
  for (int filled = 0; filled <= beta.size(); ++filled)
    for (const auto& delta : z_vectors(beta, filled)) support.insert(delta.shape());
  LinearCombination out(Basis::S);
  for (const auto& unit_gamma : support) {
    const Coeff c = left_pieri_unit_coefficient(beta, unit_gamma);
    if (c == 0) continue;
    std::vector<int> parts = unit_gamma.vector();
    parts[0] += s - 1;
    out.add(Composition(std::move(parts)), c);
  }
  return out;
}

}  // namespace nsym
