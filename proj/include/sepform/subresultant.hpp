#pragma once

// Subresultant sequences of two polynomials in y over an integral domain D.
// For bivariate inputs D is R[x].

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sepform/bivar.hpp"
#include "sepform/errors.hpp"
#include "sepform/modular.hpp"
#include "sepform/poly.hpp"

namespace sepform {

/// S[i] = Sres_i and s[i] = sres_i for i = 0..q.
///
/// When p > q the top entry S[q] = b^(p-q-1) Q is the ordinary determinantal
/// subresultant. When p == q the definition sets Sres_q = Q / b, which need
/// not exist over D; S[q] then holds Q itself (`top_scaled`), an associate
/// over the fraction field, and s[q] = 1.
template <class D>
struct SubresSeq {
  std::size_t p = 0;
  std::size_t q = 0;
  bool top_scaled = false;
  std::vector<Poly<D>> S;
  std::vector<D> s;

  const Poly<D>& resultant_poly() const { return S[0]; }
  const D& resultant() const { return s[0]; }
  /// Highest index covered by the determinantal definition.
  std::size_t last_determinantal() const { return std::min(q, p - 1); }
};

namespace detail {

inline void check_subres_input(bool p_zero, bool q_zero, std::size_t p, std::size_t q) {
  if (p_zero || q_zero) throw InvalidInput("subresultants of the zero polynomial");
  if (p < q) throw InvalidInput("subresultants require deg_y(P) >= deg_y(Q)");
  if (p == 0) throw InvalidInput("subresultants require deg_y(P) >= 1");
}

}  // namespace detail

/// Full subresultant sequence by the Ducos recurrences with Lazard's
/// reduction in the defective steps.
template <class D>
SubresSeq<D> subres_sequence(const Poly<D>& P, const Poly<D>& Q) {
  detail::check_subres_input(P.is_zero(), Q.is_zero(), P.is_zero() ? 0 : P.deg(),
                             Q.is_zero() ? 0 : Q.deg());
  SubresSeq<D> out;
  const std::size_t p = P.deg();
  const std::size_t q = Q.deg();
  out.p = p;
  out.q = q;
  out.S.assign(q + 1, Poly<D>());
  out.s.assign(q + 1, D{});
  const D& b = Q.leading();
  D sc;
  if (p > q) {
    out.S[q] = pow(b, p - q - 1) * Q;
    sc = pow(b, p - q);
  } else {
    out.top_scaled = true;
    out.S[q] = Q;
    sc = ring_traits<D>::one_like(b);
  }
  out.s[q] = sc;
  if (q == 0) return out;

  Poly<D> A = Q;
  Poly<D> B = prem(P, -Q);
  while (!B.is_zero()) {
    const std::size_t d = A.deg();
    const std::size_t e = B.deg();
    const std::size_t delta = d - e;
    out.S[d - 1] = B;
    out.s[d - 1] = e == d - 1 ? B.leading() : D{};
    Poly<D> C = B;
    if (delta > 1) {
      const D& lb = B.leading();
      D c = lb;
      for (std::size_t k = 1; k + 1 < delta; ++k) c = exact_div(D(c * lb), sc);
      C = exact_div_scalar(c * B, sc);
      out.S[e] = C;
      out.s[e] = C.leading();
    }
    if (e == 0) break;
    D denom = pow(sc, delta) * A.leading();
    Poly<D> next = exact_div_scalar(prem(A, -B), denom);
    A = std::move(C);
    sc = A.leading();
    B = std::move(next);
  }
  return out;
}

template <class D>
std::vector<D> principal_coeffs_direct(const Poly<D>& P, const Poly<D>& Q) {
  return subres_sequence(P, Q).s;
}

namespace detail {

/// Upper bounds on deg_x sres_i for i = 0..q (total and partial degrees).
template <class R>
std::vector<std::size_t> sres_degree_bounds(const BivarPoly<R>& P, const BivarPoly<R>& Q) {
  const std::size_t p = P.deg(), q = Q.deg();
  const std::size_t dP = total_degree(P).value(), dQ = total_degree(Q).value();
  const std::size_t dxP = degree_x(P).value(), dxQ = degree_x(Q).value();
  const long long top = static_cast<long long>(p + q) - 1;
  std::vector<std::size_t> D(q + 1, 0);
  for (std::size_t i = 0; i <= q; ++i) {
    if (i == q) {
      D[i] = p > q ? (p - q) * Q.leading().deg() : 0;
      continue;
    }
    const long long m = static_cast<long long>(p + q - 2 * i);
    long long w = 0;
    for (long long r = static_cast<long long>(i); r <= static_cast<long long>(q) - 1; ++r)
      w += static_cast<long long>(dP) - top + r;
    for (long long r = static_cast<long long>(i); r <= static_cast<long long>(p) - 1; ++r)
      w += static_cast<long long>(dQ) - top + r;
    w += m * (m - 1) / 2;
    const long long plain = static_cast<long long>((q - i) * dxP + (p - i) * dxQ);
    D[i] = static_cast<std::size_t>(std::max(0LL, std::min(w, plain)));
  }
  return D;
}

/// Squared 2-norm bound sum_k ||a_k||_1^2 over the y-coefficients.
inline BigInt squared_row_norm(const BivarPoly<BigInt>& P) {
  BigInt acc = 0;
  for (const auto& c : P.coeffs()) {
    BigInt l1 = 0;
    for (const auto& v : c.coeffs()) l1 += abs(v);
    acc += l1 * l1;
  }
  return acc;
}

/// Chooses x0 such that Lc_y(P) Lc_y(Q) has no integer root in [x0, x0+n).
inline long long good_integer_offset(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q,
                                     std::size_t n) {
  const Poly<BigInt> L = P.leading() * Q.leading();
  long long x0 = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (evaluate(L, BigInt(static_cast<long>(x0 + static_cast<long long>(j)))) == 0) {
        x0 += static_cast<long long>(j) + 1;
        ok = false;
        break;
      }
    }
    if (ok) return x0;
  }
}

/// Images of sres_0..sres_q modulo one prime, by evaluation at x0..x0+n-1
/// and interpolation. Returns false if some point is bad modulo this prime.
inline bool sres_images_mod(const MontField& F, const std::vector<RawPoly>& Pc,
                            const std::vector<RawPoly>& Qc, unsigned long long x0,
                            const std::vector<std::size_t>& D, const std::vector<bool>& wanted,
                            std::vector<RawPoly>& images) {
  const std::size_t q = Qc.size() - 1;
  std::size_t npts = 0;
  for (std::size_t i = 0; i <= q; ++i)
    if (wanted[i]) npts = std::max(npts, D[i] + 1);
  std::vector<std::vector<u64>> values(q + 1);
  for (std::size_t i = 0; i <= q; ++i)
    if (wanted[i]) values[i].resize(D[i] + 1);
  RawPoly A(Pc.size()), B(Qc.size());
  std::vector<u64> out;
  for (std::size_t j = 0; j < npts; ++j) {
    const u64 x = F.to(x0 + j);
    for (std::size_t k = 0; k < Pc.size(); ++k) A[k] = horner(F, Pc[k], x);
    for (std::size_t k = 0; k < Qc.size(); ++k) B[k] = horner(F, Qc[k], x);
    if (A.back() == 0 || B.back() == 0) return false;
    principal_kernel(F, A, B, out);
    for (std::size_t i = 0; i <= q; ++i)
      if (wanted[i] && j < values[i].size()) values[i][j] = out[i];
  }
  const auto inv = small_inverses(F, npts);
  images.assign(q + 1, RawPoly());
  for (std::size_t i = 0; i <= q; ++i)
    if (wanted[i]) images[i] = interpolate_consecutive(F, x0, std::move(values[i]), inv);
  return true;
}

}  // namespace detail

/// sres_0..sres_q of P, Q in Z[x][y] by multimodular evaluation and
/// interpolation, with CRT stopping at the Hadamard bound.
inline std::vector<Poly<BigInt>> principal_coeffs(const BivarPoly<BigInt>& P,
                                                  const BivarPoly<BigInt>& Q) {
  detail::check_subres_input(P.is_zero(), Q.is_zero(), P.is_zero() ? 0 : P.deg(),
                             Q.is_zero() ? 0 : Q.deg());
  const std::size_t p = P.deg(), q = Q.deg();
  std::vector<Poly<BigInt>> result(q + 1);
  result[q] = p > q ? pow(Q.leading(), p - q) : Poly<BigInt>::constant(BigInt(1));
  if (q == 0) return result;

  const auto D = detail::sres_degree_bounds(P, Q);
  std::size_t npts = 0;
  for (std::size_t i = 0; i < q; ++i) npts = std::max(npts, D[i] + 1);
  const long long x0 = detail::good_integer_offset(P, Q, npts);

  const BigInt np2 = detail::squared_row_norm(P), nq2 = detail::squared_row_norm(Q);
  std::vector<BigInt> bound_sq(q);  // (2B)^2 for each index
  for (std::size_t i = 0; i < q; ++i) {
    BigInt b2 = 4;
    for (std::size_t k = 0; k < q - i; ++k) b2 *= np2;
    for (std::size_t k = 0; k < p - i; ++k) b2 *= nq2;
    bound_sq[i] = b2;
  }

  std::vector<detail::CrtAccumulator> acc(q);
  std::vector<bool> wanted(q + 1, true);
  wanted[q] = false;
  detail::PrimeStream primes;
  std::vector<detail::RawPoly> images;
  for (;;) {
    bool any = false;
    for (std::size_t i = 0; i < q; ++i) any = any || wanted[i];
    if (!any) break;
    const std::uint64_t prime = primes.next();
    detail::MontField F(prime);
    std::vector<detail::RawPoly> Pc, Qc;
    for (const auto& c : P.coeffs()) Pc.push_back(detail::to_raw(F, c));
    for (const auto& c : Q.coeffs()) Qc.push_back(detail::to_raw(F, c));
    if (Pc.back().empty() || Qc.back().empty()) continue;
    const unsigned long long shift = static_cast<unsigned long long>(mod_u64(BigInt(static_cast<long>(x0)), prime));
    if (!detail::sres_images_mod(F, Pc, Qc, shift, D, wanted, images)) continue;
    for (std::size_t i = 0; i < q; ++i) {
      if (!wanted[i]) continue;
      acc[i].add(F, images[i]);
      const BigInt& M = acc[i].modulus();
      if (M * M > bound_sq[i]) wanted[i] = false;
    }
  }
  for (std::size_t i = 0; i < q; ++i) result[i] = acc[i].symmetric();
  return result;
}

/// sres_0..sres_q of P, Q in Z_mu[x][y]. Uses evaluation/interpolation when
/// Z_mu has enough points, and the direct chain over Z_mu[x] otherwise.
/// With `resultant_only` only entry 0 is filled (the others stay zero).
inline std::vector<Poly<ModInt>> principal_coeffs(const BivarPoly<ModInt>& P,
                                                  const BivarPoly<ModInt>& Q,
                                                  bool resultant_only = false) {
  detail::check_subres_input(P.is_zero(), Q.is_zero(), P.is_zero() ? 0 : P.deg(),
                             Q.is_zero() ? 0 : Q.deg());
  const std::size_t p = P.deg(), q = Q.deg();
  const std::uint64_t mu = P.leading().leading().modulus();
  const auto D = detail::sres_degree_bounds(P, Q);
  std::size_t npts = 0;
  for (std::size_t i = 0; i < (resultant_only ? std::min<std::size_t>(q, 1) : q); ++i)
    npts = std::max(npts, D[i] + 1);
  if (q == 0 || mu < 3 || npts + 1 >= mu) return principal_coeffs_direct(P, Q);

  detail::MontField F(mu);
  std::vector<detail::RawPoly> Pc, Qc;
  for (const auto& c : P.coeffs()) Pc.push_back(detail::to_raw(F, c));
  for (const auto& c : Q.coeffs()) Qc.push_back(detail::to_raw(F, c));
  const detail::RawPoly lp = Pc.back(), lq = Qc.back();
  // Slide a window of npts consecutive points avoiding roots of the leading
  // coefficients.
  std::uint64_t x0 = 0;
  for (std::size_t j = 0; j < npts;) {
    if (x0 + npts > mu) return principal_coeffs_direct(P, Q);
    const detail::u64 x = F.to(x0 + j);
    if (detail::horner(F, lp, x) == 0 || detail::horner(F, lq, x) == 0) {
      x0 += j + 1;
      j = 0;
    } else {
      ++j;
    }
  }
  std::vector<bool> wanted(q + 1, !resultant_only);
  wanted[0] = true;
  wanted[q] = false;
  std::vector<detail::RawPoly> images;
  if (!detail::sres_images_mod(F, Pc, Qc, x0, D, wanted, images)) {
    throw ContractViolation("evaluation window hit a root of a leading coefficient");
  }
  std::vector<Poly<ModInt>> out(q + 1);
  for (std::size_t i = 0; i < q; ++i) {
    if (!wanted[i]) continue;
    std::vector<ModInt> cs(images[i].size());
    for (std::size_t k = 0; k < cs.size(); ++k) cs[k] = ModInt(F.from(images[i][k]), mu);
    out[i] = Poly<ModInt>(std::move(cs));
  }
  out[q] = p > q ? pow(Q.leading(), p - q) : Poly<ModInt>::constant(ModInt(1, mu));
  return out;
}

namespace detail {

inline Poly<BigInt> resultant_principal(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q) {
  return principal_coeffs(P, Q)[0];
}

inline Poly<ModInt> resultant_principal(const BivarPoly<ModInt>& P, const BivarPoly<ModInt>& Q) {
  return principal_coeffs(P, Q, true)[0];
}

}  // namespace detail

/// Res_y(P, Q) = sres_0, for any argument order of degrees (Res_y(Q,P) =
/// (-1)^(pq) Res_y(P,Q)).
template <class R>
Poly<R> resultant_y(const BivarPoly<R>& P, const BivarPoly<R>& Q) {
  if (P.is_zero() || Q.is_zero()) return Poly<R>();
  const std::size_t p = P.deg(), q = Q.deg();
  if (p >= q) {
    if (p == 0) return Poly<R>::constant(ring_traits<R>::one_like(P.leading().leading()));
    return detail::resultant_principal(P, Q);
  }
  Poly<R> r = detail::resultant_principal(Q, P);
  return (p * q) % 2 ? -r : r;
}

}  // namespace sepform
