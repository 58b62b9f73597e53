#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>

namespace sepform {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which is a distinct state and never aliases an integer value.
class Degree {
 public:
  constexpr Degree(std::size_t value) : value_(value), finite_(true) {}

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return !finite_; }

  std::size_t value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial has no value");
    return value_;
  }

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  // -inf absorbs: deg(0 * f) = -inf.
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Degree& d) {
    if (d.is_minus_infinity()) return os << "-inf";
    return os << d.value_;
  }

 private:
  constexpr Degree() : value_(0), finite_(false) {}

  std::size_t value_;
  bool finite_;
};

}  // namespace sepform
