#include "nsym/composition.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "nsym/errors.hpp"

namespace nsym {

namespace {

std::string join(std::span<const int> xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ')';
  return os.str();
}

int inversion_sign(const std::vector<int>& images) {
  int inversions = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0)
      throw InvalidArgument("composition parts must be positive: " + join(parts_));
    size_ += p;
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Composition::to_string() const { return join(parts_); }

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                b.parts_.begin(), b.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << c.to_string();
}

// ------------------------------------------------------------------ Partition

Partition::Partition(Composition c) : c_(std::move(c)) {
  if (!c_.is_partition())
    throw InvalidArgument("not a partition: " + c_.to_string());
}

Partition::Partition(std::vector<int> parts) : Partition(Composition(std::move(parts))) {}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(Composition(parts)) {}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v])
      throw InvalidArgument("not a permutation: " + join(images_));
    seen[v] = true;
  }
  sign_ = inversion_sign(images_);
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::vector<int>(images)) {}

Permutation Permutation::identity(std::size_t m) {
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 1);
  return Permutation(std::move(id));
}

Permutation Permutation::adjacent_transposition(std::size_t m, int r) {
  if (r < 1 || static_cast<std::size_t>(r) >= m)
    throw InvalidArgument("transposition index out of range");
  std::vector<int> t(m);
  std::iota(t.begin(), t.end(), 1);
  std::swap(t[r - 1], t[r]);
  return Permutation(std::move(t));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.length() != length())
    throw InvalidArgument("composing permutations of different lengths");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const { return join(images_); }

// ----------------------------------------------------------------- operations

Partition sort(const Composition& alpha) {
  std::vector<int> parts = alpha.vector();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Composition comp(const IntVector& delta) {
  std::vector<int> parts;
  for (int d : delta) {
    if (d < 0) throw InvalidArgument("comp: negative entry in " + join(delta));
    if (d > 0) parts.push_back(d);
  }
  return Composition(std::move(parts));
}

Composition scale(const Composition& alpha, int n) {
  if (n < 1) throw InvalidArgument("scale factor must be positive");
  std::vector<int> parts = alpha.vector();
  for (int& p : parts) p *= n;
  return Composition(std::move(parts));
}

Composition add_prefix(const Composition& alpha, const Composition& v) {
  if (v.length() > alpha.length())
    throw InvalidArgument("add_prefix: " + v.to_string() + " is longer than " +
                          alpha.to_string());
  std::vector<int> parts = alpha.vector();
  for (std::size_t i = 0; i < v.length(); ++i) parts[i] += v[i];
  return Composition(std::move(parts));
}

bool is_right_pieri_successor(const Composition& alpha, const Composition& beta,
                              int s) {
  if (beta.size() != alpha.size() + s) return false;
  if (beta.length() > alpha.length() + 1) return false;
  if (beta.length() < alpha.length()) return false;
  for (std::size_t j = 0; j < alpha.length(); ++j)
    if (alpha[j] > beta[j]) return false;
  return true;
}

std::vector<Composition> right_pieri_successors(const Composition& alpha, int s) {
  if (s < 1) throw InvalidArgument("right_pieri_successors: s must be positive");
  std::vector<Composition> out;
  const std::size_t k = alpha.length();
  std::vector<int> cur = alpha.vector();
  // Distribute the s new cells over the existing rows, the remainder (if
  // any) becomes one new row.
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i == k) {
      std::vector<int> parts = cur;
      if (left > 0) parts.push_back(left);
      out.emplace_back(std::move(parts));
      return;
    }
    for (int add = 0; add <= left; ++add) {
      cur[i] = alpha[i] + add;
      go(i + 1, left - add);
    }
    cur[i] = alpha[i];
  };
  go(0, s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> horizontal_strip_successors(const Partition& mu, int n) {
  if (n < 1) throw InvalidArgument("horizontal_strip_successors: n must be positive");
  std::vector<Partition> out;
  const std::size_t k = mu.length();
  std::vector<int> cur(k + 1, 0);
  // nu_1 >= mu_1 >= nu_2 >= mu_2 >= ... >= nu_{k+1} >= 0.
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    const int lo = i < k ? mu[i] : 0;
    if (i == k) {
      const int hi = k == 0 ? left : mu[k - 1];
      if (left > hi) return;
      cur[i] = left;
      std::vector<int> parts;
      for (int p : cur)
        if (p > 0) parts.push_back(p);
      out.emplace_back(std::move(parts));
      return;
    }
    const int hi = i == 0 ? lo + left : std::min(mu[i - 1], lo + left);
    for (int v = lo; v <= hi; ++v) {
      cur[i] = v;
      go(i + 1, left - (v - lo));
    }
  };
  go(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Permutation>& permutations(int m) {
  if (m < 0) throw InvalidArgument("permutations: negative length");
  if (m > kMaxPermutationLength)
    throw ResourceLimit("permutation enumeration guard: length " + std::to_string(m) +
                        " exceeds " + std::to_string(kMaxPermutationLength));
  static std::array<std::once_flag, kMaxPermutationLength + 1> flags;
  static std::array<std::vector<Permutation>, kMaxPermutationLength + 1> cache;
  std::call_once(flags[m], [m] {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 1);
    auto& out = cache[m];
    do {
      out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  });
  return cache[m];
}

std::vector<Composition> compositions_of(int n, std::size_t max_length) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> go = [&](int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_length) return;
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      go(left - p);
      cur.pop_back();
    }
  };
  go(n);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  return compositions_of(n, static_cast<std::size_t>(std::max(n, 0)));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= std::min(left, max_part); ++p) {
      cur.push_back(p);
      go(left - p, p);
      cur.pop_back();
    }
  };
  go(n, n);
  return out;
}

}  // namespace nsym
