#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "nsym/composition.hpp"

namespace nsym {

/// Exact integer coefficient. Arithmetic goes through the checked helpers
/// below and raises OverflowError instead of wrapping.
using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// H: complete homogeneous NSym basis, S: immaculate basis,
/// h: complete homogeneous Sym basis, s: Schur basis.
enum class Basis { H, S, h, s };

std::string to_string(Basis b);
/// Accepts "H", "S", "h", "s". Throws InvalidArgument otherwise.
Basis parse_basis(const std::string& label);
/// True for the commutative bases, whose indices must be partitions.
inline bool is_symmetric(Basis b) { return b == Basis::h || b == Basis::s; }

/// A finite integer combination of basis elements indexed by compositions.
///
/// No stored coefficient is zero, and iteration follows the graded-lex order
/// of the indices. For bases h and s every index is a partition.
class LinearCombination {
 public:
  using Terms = std::map<Composition, Coeff>;

  explicit LinearCombination(Basis basis) : basis_(basis) {}
  LinearCombination(Basis basis, const Composition& index, Coeff coeff = 1);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of `index`, 0 when absent.
  Coeff coefficient(const Composition& index) const;

  /// Adds `coeff` at `index`, dropping the entry if it cancels.
  void add(const Composition& index, Coeff coeff);
  /// this += factor * other. Bases must agree.
  void add_scaled(const LinearCombination& other, Coeff factor);

  LinearCombination& operator+=(const LinearCombination& other);
  LinearCombination& operator-=(const LinearCombination& other);
  LinearCombination operator-() const;
  LinearCombination scaled(Coeff factor) const;

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  void check_index(const Composition& index) const;
  void check_same_basis(const LinearCombination& other) const;

  Basis basis_;
  Terms terms_;
};

}  // namespace nsym
