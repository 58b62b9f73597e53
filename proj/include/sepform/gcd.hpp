#pragma once

// GCDs and squarefree parts. Over a field results are monic; over Z they are
// primitive with positive leading coefficient (integer contents are dropped).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "sepform/bivar.hpp"
#include "sepform/errors.hpp"
#include "sepform/modular.hpp"
#include "sepform/poly.hpp"
#include "sepform/rng.hpp"
#include "sepform/subresultant.hpp"

namespace sepform {

template <class F>
Poly<F> gcd_uni(Poly<F> f, Poly<F> g) {
  static_assert(ring_traits<F>::is_field, "gcd_uni requires a field");
  if (f.is_zero() && g.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  while (!g.is_zero()) {
    Poly<F> r = divrem(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f);
}

namespace detail {

template <class F>
void require_characteristic(const Poly<F>&, std::size_t) {}

inline void require_characteristic(const Poly<ModInt>& f, std::size_t deg) {
  const std::uint64_t mu = f.leading().modulus();
  if (mu <= deg) {
    throw InvalidModulus("characteristic " + std::to_string(mu) +
                         " too small for the squarefree part of a degree " + std::to_string(deg) +
                         " polynomial");
  }
}

}  // namespace detail

/// f / gcd(f, f'), monic.
template <class F>
Poly<F> squarefree_part_uni(const Poly<F>& f) {
  if (f.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  detail::require_characteristic(f, f.deg());
  if (f.deg() == 0) return monic(f);
  return monic(divrem(f, gcd_uni(f, derivative(f))).first);
}

/// Multiplicity of beta as a root of f (f nonzero).
template <class F>
std::size_t root_multiplicity(Poly<F> f, const F& beta) {
  if (f.is_zero()) throw InvalidInput("root multiplicity in the zero polynomial");
  const F one = ring_traits<F>::one_like(f.leading());
  const Poly<F> lin(std::vector<F>{-beta, one});
  std::size_t m = 0;
  for (;;) {
    auto [q, r] = divrem(f, lin);
    if (!r.is_zero()) return m;
    ++m;
    f = std::move(q);
  }
}

inline BigInt content(const Poly<BigInt>& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Primitive part with positive leading coefficient.
inline Poly<BigInt> primitive_part(const Poly<BigInt>& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  if (f.leading() < 0) c = -c;
  return c == 1 ? f : exact_div_scalar(f, c);
}

/// Deterministic reference gcd over Z by the primitive pseudo-remainder
/// sequence.
inline Poly<BigInt> gcd_int_subres(const Poly<BigInt>& f, const Poly<BigInt>& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  Poly<BigInt> a = primitive_part(f), b = primitive_part(g);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.deg() == 0) return Poly<BigInt>::constant(BigInt(1));
    Poly<BigInt> r = primitive_part(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

enum class Strategy { deterministic, las_vegas };

/// How integer gcds choose primes. Las-Vegas draws random primes and stops
/// once the CRT image stabilises; the deterministic route scans a fixed
/// prime sequence up to the Mignotte bound. Both finish with trial division.
struct GcdContext {
  Strategy strategy = Strategy::deterministic;
  Rng* rng = nullptr;
};

namespace detail {

inline RawPoly gcd_raw(const MontField& F, RawPoly a, RawPoly b) {
  while (!b.empty()) {
    rem_inplace(F, a, b);
    std::swap(a, b);
  }
  if (!a.empty()) scale_inplace(F, a, F.inv(a.back()));
  return a;
}

inline bool divides(const Poly<BigInt>& h, const Poly<BigInt>& f) {
  if (f.is_zero()) return true;
  if (h.deg() > f.deg()) return false;
  // Cheap necessary condition before the exact division.
  if (!mpz_divisible_p(f.leading().get_mpz_t(), h.leading().get_mpz_t())) return false;
  if (!mpz_divisible_p(f[0].get_mpz_t(), h[0].get_mpz_t()) && h[0] != 0) return false;
  try {
    (void)exact_div(f, h);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

inline BigInt norm2_ceil(const Poly<BigInt>& f) {
  BigInt s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

}  // namespace detail

/// Multimodular gcd of integer polynomials; see GcdContext for the prime
/// choice. The result is correct in both modes.
inline Poly<BigInt> gcd_int(const Poly<BigInt>& f0, const Poly<BigInt>& g0, const GcdContext& ctx = {}) {
  if (f0.is_zero() && g0.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  Poly<BigInt> f = primitive_part(f0), g = primitive_part(g0);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const Poly<BigInt> one = Poly<BigInt>::constant(BigInt(1));
  if (f.deg() == 0 || g.deg() == 0) return one;
  if (f.deg() < g.deg()) std::swap(f, g);
  if (ctx.strategy == Strategy::las_vegas && !ctx.rng) throw ContractViolation("Las-Vegas gcd without an rng");

  BigInt gamma;
  mpz_gcd(gamma.get_mpz_t(), f.leading().get_mpz_t(), g.leading().get_mpz_t());
  const BigInt bound_base = std::min(detail::norm2_ceil(f), detail::norm2_ceil(g));

  detail::PrimeStream stream;
  auto pick_prime = [&]() -> std::uint64_t {
    if (ctx.strategy == Strategy::deterministic) return stream.next();
    const std::uint64_t lo = std::uint64_t(1) << 61, hi = (std::uint64_t(1) << 62) - 1;
    return next_prime(ctx.rng->uniform(lo, hi));
  };

  std::optional<std::size_t> cur_deg;
  detail::CrtAccumulator acc;
  std::optional<Poly<BigInt>> previous;
  for (;;) {
    const std::uint64_t p = pick_prime();
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0 || mpz_fdiv_ui(g.leading().get_mpz_t(), p) == 0) continue;
    detail::MontField F(p);
    detail::RawPoly h = detail::gcd_raw(F, detail::to_raw(F, f), detail::to_raw(F, g));
    const std::size_t k = h.size() - 1;
    if (k == 0) return one;
    if (cur_deg && k > *cur_deg) continue;  // unlucky prime
    if (!cur_deg || k < *cur_deg) {
      cur_deg = k;
      acc = detail::CrtAccumulator();
      previous.reset();
    }
    detail::scale_inplace(F, h, F.from_bigint(gamma));
    acc.add(F, h);

    bool try_now = false;
    Poly<BigInt> cand;
    if (ctx.strategy == Strategy::deterministic) {
      BigInt B = bound_base * abs(gamma);
      mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), k + 1);  // 2 * gamma * 2^k * ||f||
      try_now = acc.modulus() > B;
      if (try_now) cand = acc.symmetric();
    } else {
      cand = acc.symmetric();
      try_now = previous && *previous == cand;
      previous = cand;
    }
    if (!try_now) continue;
    Poly<BigInt> h_int = primitive_part(cand);
    if (h_int.deg() == k && detail::divides(h_int, f) && detail::divides(h_int, g)) return h_int;
  }
}

inline Poly<BigInt> gcd_int_lasvegas(const Poly<BigInt>& f, const Poly<BigInt>& g, Rng& rng) {
  return gcd_int(f, g, GcdContext{Strategy::las_vegas, &rng});
}

/// Primitive squarefree part over Z.
inline Poly<BigInt> squarefree_part_int(const Poly<BigInt>& f, const GcdContext& ctx = {}) {
  if (f.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  Poly<BigInt> pp = primitive_part(f);
  if (pp.deg() == 0) return Poly<BigInt>::constant(BigInt(1));
  Poly<BigInt> g = gcd_int(pp, derivative(pp), ctx);
  if (g.deg() == 0) return pp;
  return primitive_part(exact_div(pp, g));
}

// ---------------------------------------------------------------------------
// Bivariate, over Z[x][y].

/// gcd over Z[x] of the y-coefficients, primitive.
inline Poly<BigInt> content_y(const BivarPoly<BigInt>& P, const GcdContext& ctx = {}) {
  if (P.is_zero()) return {};
  Poly<BigInt> c;
  for (const auto& coeff : P.coeffs()) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? primitive_part(coeff) : gcd_int(c, coeff, ctx);
    if (c.deg() == 0) break;
  }
  return c;
}

/// Sign and integer content normalisation: the leading coefficient of the
/// leading y-coefficient becomes positive and the integer content 1.
inline BivarPoly<BigInt> normalize_bivar(const BivarPoly<BigInt>& P) {
  if (P.is_zero()) return P;
  BigInt g = 0;
  for (const auto& c : P.coeffs()) {
    BigInt cc = content(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
  }
  if (P.leading().leading() < 0) g = -g;
  if (g == 1) return P;
  std::vector<Poly<BigInt>> ys;
  for (const auto& c : P.coeffs()) ys.push_back(exact_div_scalar(c, g));
  return BivarPoly<BigInt>(std::move(ys));
}

inline BivarPoly<BigInt> primitive_part_y(const BivarPoly<BigInt>& P, const GcdContext& ctx = {}) {
  if (P.is_zero()) return P;
  Poly<BigInt> c = content_y(P, ctx);
  if (c.deg() == 0) return normalize_bivar(P);
  std::vector<Poly<BigInt>> ys;
  for (const auto& coeff : P.coeffs()) ys.push_back(exact_div(coeff, c));
  return normalize_bivar(BivarPoly<BigInt>(std::move(ys)));
}

/// gcd in Z[x,y], normalised as in normalize_bivar.
inline BivarPoly<BigInt> gcd_bivar(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q,
                                   const GcdContext& ctx = {}) {
  if (P.is_zero() && Q.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  if (P.is_zero()) return normalize_bivar(Q);
  if (Q.is_zero()) return normalize_bivar(P);
  const Poly<BigInt> cP = content_y(P, ctx), cQ = content_y(Q, ctx);
  const Poly<BigInt> c = gcd_int(cP, cQ, ctx);
  BivarPoly<BigInt> A = primitive_part_y(P, ctx), B = primitive_part_y(Q, ctx);
  BivarPoly<BigInt> g;
  if (A.deg() == 0 || B.deg() == 0) {
    g = BivarPoly<BigInt>::constant(Poly<BigInt>::constant(BigInt(1)));
  } else {
    if (A.deg() < B.deg()) std::swap(A, B);
    if (!resultant_y(A, B).is_zero()) {
      g = BivarPoly<BigInt>::constant(Poly<BigInt>::constant(BigInt(1)));
    } else {
      // Primitive PRS in y over Z[x].
      while (true) {
        BivarPoly<BigInt> r = prem(A, B);
        if (r.is_zero()) {
          g = B;
          break;
        }
        if (r.deg() == 0) {
          g = BivarPoly<BigInt>::constant(Poly<BigInt>::constant(BigInt(1)));
          break;
        }
        A = std::move(B);
        B = primitive_part_y(r, ctx);
      }
    }
  }
  return normalize_bivar(lift_x(c) * primitive_part_y(g, ctx));
}

/// Product of the distinct irreducible factors, normalised.
inline BivarPoly<BigInt> squarefree_part_bivar(const BivarPoly<BigInt>& P, const GcdContext& ctx = {}) {
  if (P.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  const Poly<BigInt> c = content_y(P, ctx);
  const Poly<BigInt> c_sq = c.deg() == 0 ? c : squarefree_part_int(c, ctx);
  BivarPoly<BigInt> pp = primitive_part_y(P, ctx);
  if (pp.deg() > 0) {
    const BivarPoly<BigInt> dpp = partial_y(pp);
    const BivarPoly<BigInt> g = gcd_bivar(pp, dpp, ctx);
    if (g.deg() > 0) pp = exact_div(pp, g);
  }
  return normalize_bivar(lift_x(c_sq) * pp);
}

inline bool is_squarefree_bivar(const BivarPoly<BigInt>& P, const GcdContext& ctx = {}) {
  const BivarPoly<BigInt> s = squarefree_part_bivar(P, ctx);
  return total_degree(s) == total_degree(P);
}

}  // namespace sepform
