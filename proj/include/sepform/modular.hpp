#pragma once

// Word-size prime field kernels used by the multimodular routines. Values
// live in Montgomery form inside these kernels and never escape them.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sepform/numbers.hpp"
#include "sepform/poly.hpp"

namespace sepform::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class MontField {
 public:
  /// n odd, 2 < n < 2^63.
  explicit MontField(u64 n) : n_(n) {
    if (n < 3 || (n & 1) == 0 || n >> 63) throw std::domain_error("Montgomery modulus out of range");
    u64 inv = n;  // Newton iteration for n^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    ninv_ = -inv;
    r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % n);
    r2_ = static_cast<u64>(static_cast<u128>(r2_) * r2_ % n);
    one_ = to(1);
  }

  u64 modulus() const { return n_; }
  u64 one() const { return one_; }

  u64 redc(u128 t) const {
    u64 m = static_cast<u64>(t) * ninv_;
    u64 r = static_cast<u64>((t + static_cast<u128>(m) * n_) >> 64);
    return r >= n_ ? r - n_ : r;
  }
  u64 to(u64 a) const { return redc(static_cast<u128>(a % n_) * r2_); }
  u64 from(u64 a) const { return redc(a); }
  u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + n_ - b; }
  u64 neg(u64 a) const { return a ? n_ - a : 0; }

  u64 pow(u64 a, u64 e) const {
    u64 r = one_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, n_ - 2);
  }

  u64 from_bigint(const BigInt& v) const { return to(mpz_fdiv_ui(v.get_mpz_t(), n_)); }
  u64 from_signed(long long v) const {
    long long r = v % static_cast<long long>(n_);
    if (r < 0) r += static_cast<long long>(n_);
    return to(static_cast<u64>(r));
  }

 private:
  u64 n_, ninv_, r2_, one_;
};

/// Dense polynomial over a MontField, low-to-high, trailing zeros trimmed.
using RawPoly = std::vector<u64>;

inline void trim(RawPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline u64 horner(const MontField& F, const RawPoly& f, u64 x) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

inline RawPoly to_raw(const MontField& F, const Poly<BigInt>& f) {
  RawPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.from_bigint(f[i]);
  trim(r);
  return r;
}

inline RawPoly to_raw(const MontField& F, const Poly<ModInt>& f) {
  RawPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.to(f[i].value());
  trim(r);
  return r;
}

/// In-place remainder of a by b (b nonzero), using the inverse of lc(b).
inline void rem_inplace(const MontField& F, RawPoly& a, const RawPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return;
  const u64 ib = F.inv(b.back());
  for (std::size_t top = a.size(); top-- > db;) {
    u64 c = a[top];
    if (c == 0) continue;
    c = F.mul(c, ib);
    const std::size_t shift = top - db;
    for (std::size_t j = 0; j < db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    a[top] = 0;
  }
  a.resize(db);
  trim(a);
}

inline void scale_inplace(const MontField& F, RawPoly& a, u64 s) {
  for (auto& c : a) c = F.mul(c, s);
  if (s == 0) a.clear();
}

/// Principal subresultant coefficients of univariate P, Q (deg P = p >= deg Q
/// = q, both leading coefficients nonzero). out[i] = sres_i for i = 0..q; when
/// p == q, out[q] = 1. Follows the same Ducos recurrences as the generic
/// chain, with every pseudo-remainder folded into one field remainder and a
/// scalar.
inline void principal_kernel(const MontField& F, RawPoly A, RawPoly B, std::vector<u64>& out) {
  const std::size_t p = A.size() - 1;
  const std::size_t q = B.size() - 1;
  out.assign(q + 1, 0);
  const u64 b = B.back();
  u64 sc = p > q ? F.pow(b, p - q) : F.one();
  out[q] = sc;
  if (q == 0) return;
  // B1 = prem(P, -Q) = (-b)^(p-q+1) * (P mod Q)
  rem_inplace(F, A, B);
  scale_inplace(F, A, F.pow(F.neg(b), p - q + 1));
  std::swap(A, B);  // A = Q, B = prem(P, -Q)
  while (!B.empty()) {
    const std::size_t d = A.size() - 1;
    const std::size_t e = B.size() - 1;
    const u64 lb = B.back();
    if (e == d - 1) out[d - 1] = lb;
    u64 lc_c = lb;
    RawPoly C;
    const std::size_t delta = d - e;
    if (delta > 1) {
      // C = (lb / sc)^(delta-1) * B
      u64 f = F.pow(F.mul(lb, F.inv(sc)), delta - 1);
      C = B;
      scale_inplace(F, C, f);
      lc_c = C.back();
    }
    out[e] = lc_c;
    if (e == 0) break;
    // next = prem(A, -B) / (sc^delta * lc(A)) = (-lb)^(delta+1) / (sc^delta lc(A)) * (A mod B)
    const u64 la = A.back();
    rem_inplace(F, A, B);
    u64 factor = F.mul(F.pow(F.neg(lb), delta + 1), F.inv(F.mul(F.pow(sc, delta), la)));
    scale_inplace(F, A, factor);
    RawPoly next = std::move(A);
    A = delta > 1 ? std::move(C) : std::move(B);
    B = std::move(next);
    sc = lc_c;
  }
}

/// Inverses of 1..n modulo the field characteristic (n < modulus).
inline std::vector<u64> small_inverses(const MontField& F, std::size_t n) {
  std::vector<u64> inv(n + 1, 0);
  if (n == 0) return inv;
  // Batch inversion over the prefix products.
  std::vector<u64> pre(n + 1);
  pre[0] = F.one();
  for (std::size_t k = 1; k <= n; ++k) pre[k] = F.mul(pre[k - 1], F.to(k));
  u64 run = F.inv(pre[n]);
  for (std::size_t k = n; k >= 1; --k) {
    inv[k] = F.mul(run, pre[k - 1]);
    run = F.mul(run, F.to(k));
  }
  return inv;
}

/// Interpolates values v[j] at the consecutive points x0 + j (j < v.size()).
/// inv[k] must hold 1/k for k < v.size().
inline RawPoly interpolate_consecutive(const MontField& F, u64 x0, std::vector<u64> v,
                                       const std::vector<u64>& inv) {
  const std::size_t n = v.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = n - 1; j >= k; --j) v[j] = F.mul(F.sub(v[j], v[j - 1]), inv[k]);
  }
  // Newton form to monomial basis.
  RawPoly poly;
  poly.reserve(n);
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (x - xk) + v[k]
    const u64 xk = F.to(x0 + k);
    poly.push_back(0);
    for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i] = F.sub(poly[i - 1], F.mul(xk, poly[i]));
    poly[0] = F.mul(F.neg(xk), poly[0]);
    poly[0] = F.add(poly[0], v[k]);
  }
  trim(poly);
  return poly;
}

/// Incremental CRT on a coefficient vector held in [0, M).
class CrtAccumulator {
 public:
  void add(const MontField& F, const RawPoly& image) {
    const u64 p = F.modulus();
    if (modulus_ == 0) {
      coeffs_.assign(image.size(), BigInt(0));
      for (std::size_t i = 0; i < image.size(); ++i) coeffs_[i] = to_bigint(F.from(image[i]));
      modulus_ = to_bigint(p);
      return;
    }
    if (image.size() > coeffs_.size()) coeffs_.resize(image.size(), BigInt(0));
    const u64 minv = detail::invmod(mpz_fdiv_ui(modulus_.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const u64 r = i < image.size() ? F.from(image[i]) : 0;
      const u64 c = mpz_fdiv_ui(coeffs_[i].get_mpz_t(), p);
      const u64 t = mulmod(r >= c ? r - c : r + p - c, minv, p);
      if (t) mpz_addmul_ui(coeffs_[i].get_mpz_t(), modulus_.get_mpz_t(), t);
    }
    modulus_ *= to_bigint(p);
  }

  const BigInt& modulus() const { return modulus_; }

  /// Symmetric representatives in (-M/2, M/2].
  Poly<BigInt> symmetric() const {
    BigInt half = modulus_ / 2;
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out[i] = coeffs_[i] > half ? BigInt(coeffs_[i] - modulus_) : coeffs_[i];
    }
    return Poly<BigInt>(std::move(out));
  }

 private:
  std::vector<BigInt> coeffs_;
  BigInt modulus_ = 0;
};

/// Descending sequence of primes below 2^62 for multimodular work.
class PrimeStream {
 public:
  std::uint64_t next() {
    cur_ = prev_prime(cur_);
    return cur_;
  }

 private:
  std::uint64_t cur_ = std::uint64_t(1) << 62;
};

}  // namespace sepform::detail
