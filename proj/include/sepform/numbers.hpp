#pragma once

// Coefficient rings: arbitrary-precision integers and rationals (GMP), and
// the prime fields Z_mu with word-size moduli.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepform/errors.hpp"

namespace sepform {

using BigInt = mpz_class;
using Rational = mpq_class;

/// floor(log2 |n|) + 1 for n != 0, and 0 for n == 0.
inline std::size_t bitsize(const BigInt& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline BigInt to_bigint(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

/// Residue of n in [0, m).
inline std::uint64_t mod_u64(const BigInt& n, std::uint64_t m) {
  BigInt r;
  BigInt mm = to_bigint(m);
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("residue is not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

}  // namespace detail

/// Deterministic Miller-Rabin; the witness set is exact for all n < 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : small) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Smallest prime strictly greater than n.
inline std::uint64_t next_prime(std::uint64_t n) {
  if (n < 2) return 2;
  std::uint64_t c = n + 1;
  if (c > 2 && c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

/// Largest prime strictly smaller than n (n > 2).
inline std::uint64_t prev_prime(std::uint64_t n) {
  if (n <= 3) return 2;
  std::uint64_t c = n - 1;
  if (c % 2 == 0) --c;
  while (!is_prime(c)) c -= 2;
  return c;
}

/// Element of Z_mu. A default-constructed ModInt is an unbound zero; it adopts
/// the modulus of whatever it is combined with, so `ModInt{}` can serve as
/// the additive identity in generic code.
class ModInt {
 public:
  ModInt() = default;

  /// Reduces `residue` modulo `modulus` (modulus > 1, assumed prime).
  ModInt(std::uint64_t residue, std::uint64_t modulus)
      : value_(residue % modulus), modulus_(modulus) {}

  static ModInt from_signed(long long v, std::uint64_t modulus) {
    long long r = v % static_cast<long long>(modulus);
    if (r < 0) r += static_cast<long long>(modulus);
    return ModInt(static_cast<std::uint64_t>(r), modulus);
  }

  static ModInt from_bigint(const BigInt& v, std::uint64_t modulus) {
    return ModInt(mod_u64(v, modulus), modulus);
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  bool is_bound() const { return modulus_ != 0; }

  ModInt inverse() const {
    if (modulus_ == 0 || value_ == 0) throw std::domain_error("inverse of zero in Z_mu");
    return ModInt(detail::invmod(value_, modulus_), modulus_);
  }

  /// Value in (-mu/2, mu/2].
  long long symmetric() const {
    if (value_ > modulus_ / 2) return -static_cast<long long>(modulus_ - value_);
    return static_cast<long long>(value_);
  }

  ModInt& operator+=(const ModInt& o) {
    bind(o);
    value_ += o.value_;
    if (value_ >= modulus_ && modulus_) value_ -= modulus_;
    return *this;
  }
  ModInt& operator-=(const ModInt& o) {
    bind(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
    return *this;
  }
  ModInt& operator*=(const ModInt& o) {
    bind(o);
    value_ = modulus_ ? detail::mulmod(value_, o.value_, modulus_) : 0;
    return *this;
  }
  ModInt& operator/=(const ModInt& o) { return *this *= o.inverse(); }

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }
  ModInt operator-() const {
    ModInt r = *this;
    if (value_) r.value_ = modulus_ - value_;
    return r;
  }

  friend bool operator==(const ModInt& a, const ModInt& b) {
    if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_) return false;
    return a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ModInt& a) { return os << a.value_; }

 private:
  void bind(const ModInt& o) {
    if (modulus_ == o.modulus_) return;
    if (modulus_ == 0) {
      modulus_ = o.modulus_;
    } else if (o.modulus_ != 0) {
      throw std::domain_error("mixing residues of different moduli");
    }
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Rejects non-prime moduli with the error the public API promises.
inline void require_prime(std::uint64_t mu) {
  if (!is_prime(mu)) throw InvalidModulus("modulus " + std::to_string(mu) + " is not prime");
}

}  // namespace sepform
