#include "nsym/linear_combination.hpp"

#include "nsym/errors.hpp"

namespace nsym {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("coefficient overflow in multiplication");
  return r;
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::H: return "H";
    case Basis::S: return "S";
    case Basis::h: return "h";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(const std::string& label) {
  if (label == "H") return Basis::H;
  if (label == "S") return Basis::S;
  if (label == "h") return Basis::h;
  if (label == "s") return Basis::s;
  throw InvalidArgument("unknown basis label '" + label + "'");
}

LinearCombination::LinearCombination(Basis basis, const Composition& index, Coeff coeff)
    : basis_(basis) {
  add(index, coeff);
}

Coeff LinearCombination::coefficient(const Composition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void LinearCombination::check_index(const Composition& index) const {
  if (is_symmetric(basis_) && !index.is_partition())
    throw InvalidArgument("basis " + to_string(basis_) +
                          " is indexed by partitions, got " + index.to_string());
}

void LinearCombination::check_same_basis(const LinearCombination& other) const {
  if (other.basis_ != basis_)
    throw InvalidArgument("mixing bases " + to_string(basis_) + " and " +
                          to_string(other.basis_));
}

void LinearCombination::add(const Composition& index, Coeff coeff) {
  if (coeff == 0) return;
  check_index(index);
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void LinearCombination::add_scaled(const LinearCombination& other, Coeff factor) {
  check_same_basis(other);
  if (factor == 0) return;
  for (const auto& [index, c] : other.terms_) add(index, checked_mul(c, factor));
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& other) {
  add_scaled(other, 1);
  return *this;
}

LinearCombination& LinearCombination::operator-=(const LinearCombination& other) {
  add_scaled(other, -1);
  return *this;
}

LinearCombination LinearCombination::operator-() const { return scaled(-1); }

LinearCombination LinearCombination::scaled(Coeff factor) const {
  LinearCombination out(basis_);
  out.add_scaled(*this, factor);
  return out;
}

}  // namespace nsym
