#pragma once

// Uniform interface over the coefficient rings used by the generic
// polynomial algorithms. Every ring R provides:
//   is_zero(a), one_like(a), from_int_like(a, k), exact_div(a, b), is_field
// `*_like` take a sample element so that Z_mu elements inherit a modulus.

#include <string>

#include "sepform/numbers.hpp"

namespace sepform {

template <class R>
struct ring_traits;

template <>
struct ring_traits<BigInt> {
  static constexpr bool is_field = false;
  static bool is_zero(const BigInt& a) { return a == 0; }
  static BigInt one_like(const BigInt&) { return BigInt(1); }
  static BigInt from_int_like(const BigInt&, long long k) { return BigInt(static_cast<long>(k)); }
  /// Precondition: b divides a.
  static BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static std::string to_string(const BigInt& a) { return a.get_str(); }
};

template <>
struct ring_traits<Rational> {
  static constexpr bool is_field = true;
  static bool is_zero(const Rational& a) { return a == 0; }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational from_int_like(const Rational&, long long k) { return Rational(static_cast<long>(k)); }
  static Rational exact_div(const Rational& a, const Rational& b) { return Rational(a / b); }
  static std::string to_string(const Rational& a) { return a.get_str(); }
};

template <>
struct ring_traits<ModInt> {
  static constexpr bool is_field = true;
  static bool is_zero(const ModInt& a) { return a.is_zero(); }
  static ModInt one_like(const ModInt& a) {
    if (!a.is_bound()) throw std::logic_error("one_like on an unbound residue");
    return ModInt(1, a.modulus());
  }
  static ModInt from_int_like(const ModInt& a, long long k) {
    if (!a.is_bound()) {
      if (k == 0) return ModInt{};
      throw std::logic_error("from_int_like on an unbound residue");
    }
    return ModInt::from_signed(k, a.modulus());
  }
  static ModInt exact_div(const ModInt& a, const ModInt& b) { return a / b; }
  static std::string to_string(const ModInt& a) { return std::to_string(a.value()); }
};

template <class R>
bool is_zero(const R& a) {
  return ring_traits<R>::is_zero(a);
}

template <class R>
R exact_div(const R& a, const R& b) {
  return ring_traits<R>::exact_div(a, b);
}

template <class R>
R pow(const R& base, std::size_t e) {
  R result = ring_traits<R>::one_like(base);
  R b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

}  // namespace sepform
