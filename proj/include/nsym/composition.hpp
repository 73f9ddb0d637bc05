#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace nsym {

/// Integer sequence with no normalization: zeros and negatives allowed.
using IntVector = std::vector<int>;

/// Largest m for which S_m is enumerated.
inline constexpr int kMaxPermutationLength = 10;

/// A finite sequence of positive integers. The empty sequence is the unique
/// composition of 0.
///
/// Compositions are totally ordered graded-lexicographically: first by
/// size, then lexicographically by parts. Every container keyed by
/// compositions iterates in this order.
class Composition {
 public:
  Composition() = default;
  /// Throws InvalidArgument if any part is not positive.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vector() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts.
  std::size_t length() const { return parts_.size(); }
  /// Sum of the parts.
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  bool is_partition() const;

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a,
                                          const Composition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

/// A weakly decreasing composition.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless the parts are positive and weakly
  /// decreasing.
  explicit Partition(Composition c);
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const Composition& composition() const { return c_; }
  operator const Composition&() const { return c_; }  // NOLINT

  std::span<const int> parts() const { return c_.parts(); }
  int operator[](std::size_t i) const { return c_[i]; }
  std::size_t length() const { return c_.length(); }
  int size() const { return c_.size(); }
  bool empty() const { return c_.empty(); }
  std::string to_string() const { return c_.to_string(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.c_ <=> b.c_;
  }

 private:
  Composition c_;
};

/// A permutation of {1..m} in one-line notation together with its sign.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a rearrangement of 1..m.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(std::size_t m);
  /// The transposition of r and r+1 in S_m (1-based).
  static Permutation adjacent_transposition(std::size_t m, int r);

  std::size_t length() const { return images_.size(); }
  /// Image of i, 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  int sign() const { return sign_; }

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<int> images_;
  int sign_ = 1;
};

/// Parts of `alpha` in weakly decreasing order.
Partition sort(const Composition& alpha);

/// Positive entries of `delta`, order preserved. Throws InvalidArgument on a
/// negative entry.
Composition comp(const IntVector& delta);

/// Pointwise product (N a_1, ..., N a_m). Throws InvalidArgument if N < 1.
Composition scale(const Composition& alpha, int n);

/// alpha + v on the first length(v) parts. Throws InvalidArgument if v is
/// longer than alpha.
Composition add_prefix(const Composition& alpha, const Composition& v);

/// Every beta with |beta| = |alpha| + s, beta_j >= alpha_j on the parts of
/// alpha, and length(beta) <= length(alpha) + 1. Graded-lex order.
std::vector<Composition> right_pieri_successors(const Composition& alpha, int s);

/// Predicate form of the three right-Pieri conditions, kept separate from the
/// generator so the two can be checked against each other.
bool is_right_pieri_successor(const Composition& alpha, const Composition& beta,
                              int s);

/// Every partition nu with nu/mu a horizontal strip of n cells.
std::vector<Partition> horizontal_strip_successors(const Partition& mu, int n);

/// All m! permutations of S_m in lexicographic order. Throws ResourceLimit
/// when m exceeds kMaxPermutationLength.
const std::vector<Permutation>& permutations(int m);

/// All compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);
/// All compositions of n with at most `max_length` parts.
std::vector<Composition> compositions_of(int n, std::size_t max_length);
/// All partitions of n in lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace nsym
