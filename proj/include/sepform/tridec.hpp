#pragma once

// Subresultant triangular decomposition of {P, Q}, its degree, and the
// number of critical points of a curve.

#include <cstdint>
#include <future>
#include <vector>

#include "sepform/bivar.hpp"
#include "sepform/errors.hpp"
#include "sepform/gcd.hpp"
#include "sepform/subresultant.hpp"

namespace sepform {

template <class R>
struct TriDecompEntry {
  std::size_t index = 0;
  Poly<R> A;       // A_i(x)
  BivarPoly<R> B;  // B_i(x, y) = Sres_{y,i}(P, Q)
};

template <class R>
struct TriDecomp {
  std::vector<TriDecompEntry<R>> entries;
  std::vector<Poly<R>> gcd_chain;  // G_0 .. G_{d_y(Q)}

  std::size_t degree() const {
    std::size_t total = 0;
    for (const auto& e : entries) total += e.A.deg() * (e.B.is_zero() ? 0 : e.B.deg());
    return total;
  }
};

struct DecompDegree {
  std::size_t value = 0;
  std::vector<std::size_t> gcd_degrees;  // deg G_0 .. deg G_{d_y(Q)}, truncated once 0
};

namespace detail {

template <class R>
struct uni_ops;

template <>
struct uni_ops<ModInt> {
  static Poly<ModInt> gcd(const Poly<ModInt>& a, const Poly<ModInt>& b, const GcdContext&) {
    return gcd_uni(a, b);
  }
  static Poly<ModInt> sqfree(const Poly<ModInt>& f, const GcdContext&) { return squarefree_part_uni(f); }
  static Poly<ModInt> quo(const Poly<ModInt>& a, const Poly<ModInt>& b) { return monic(divrem(a, b).first); }
};

template <>
struct uni_ops<BigInt> {
  static Poly<BigInt> gcd(const Poly<BigInt>& a, const Poly<BigInt>& b, const GcdContext& ctx) {
    return gcd_int(a, b, ctx);
  }
  static Poly<BigInt> sqfree(const Poly<BigInt>& f, const GcdContext& ctx) { return squarefree_part_int(f, ctx); }
  static Poly<BigInt> quo(const Poly<BigInt>& a, const Poly<BigInt>& b) { return primitive_part(exact_div(a, b)); }
};

template <class R>
std::string poly_text(const Poly<R>& f) {
  return to_string(f, "x");
}

/// Shared precondition checks of the decomposition and its degree.
template <class R>
void check_tridec_input(const BivarPoly<R>& P, const BivarPoly<R>& Q, const GcdContext& ctx) {
  if (P.is_zero() || Q.is_zero()) throw InvalidInput("triangular decomposition of the zero polynomial");
  if (P.deg() < Q.deg()) throw InvalidInput("triangular decomposition requires d_y(Q) <= d_y(P)");
  if (P.deg() == 0) throw InvalidInput("triangular decomposition requires d_y(P) >= 1");
  const Poly<R> g = uni_ops<R>::gcd(P.leading(), Q.leading(), ctx);
  if (g.deg() > 0) throw SharedLeadingFactor(poly_text(g));
}

template <class R>
Poly<R> squarefree_resultant(const Poly<R>& res, const GcdContext& ctx) {
  if (res.is_zero()) throw PositiveDimensional("Res_y(P, Q) vanishes identically: P and Q share a factor");
  return uni_ops<R>::sqfree(res, ctx);
}

}  // namespace detail

/// B_i is the full subresultant, so this is meant for small
/// inputs; decomposition_degree avoids it.
template <class R>
TriDecomp<R> triangular_decomposition(const BivarPoly<R>& P, const BivarPoly<R>& Q, const GcdContext& ctx = {}) {
  detail::check_tridec_input(P, Q, ctx);
  const auto seq = subres_sequence(P, Q);
  TriDecomp<R> out;
  out.gcd_chain.push_back(detail::squarefree_resultant(seq.s[0], ctx));
  for (std::size_t i = 1; i <= seq.q; ++i) {
    const Poly<R>& prev = out.gcd_chain.back();
    Poly<R> Gi = detail::uni_ops<R>::gcd(prev, seq.s[i], ctx);
    Poly<R> Ai = detail::uni_ops<R>::quo(prev, Gi);
    if (Ai.deg() > 0 && i == seq.p) {
      // p == q: S_q = Q vanishes on the vertical lines where Lc_y(Q) does;
      // P takes over there (the leading coefficients are coprime).
      Poly<R> Ab = detail::uni_ops<R>::gcd(Ai, Q.leading(), ctx);
      if (Ab.deg() > 0) {
        Poly<R> rest = detail::uni_ops<R>::quo(Ai, Ab);
        if (rest.deg() > 0) out.entries.push_back({i, rest, seq.S[i]});
        out.entries.push_back({i, Ab, P});
      } else {
        out.entries.push_back({i, Ai, seq.S[i]});
      }
    } else if (Ai.deg() > 0) {
      out.entries.push_back({i, Ai, seq.S[i]});
    }
    out.gcd_chain.push_back(std::move(Gi));
  }
  return out;
}

namespace detail {

template <class R>
DecompDegree degree_from_principal(const std::vector<Poly<R>>& s, const GcdContext& ctx) {
  DecompDegree out;
  Poly<R> G = squarefree_resultant(s[0], ctx);
  out.gcd_degrees.push_back(G.deg());
  for (std::size_t i = 1; i < s.size() && G.deg() > 0; ++i) {
    Poly<R> Gi = uni_ops<R>::gcd(G, s[i], ctx);
    out.value += (G.deg() - Gi.deg()) * i;
    out.gcd_degrees.push_back(Gi.deg());
    G = std::move(Gi);
  }
  return out;
}

}  // namespace detail

/// Decomposition degree: sum of (deg G_{i-1} - deg G_i) * i from the principal
/// subresultant coefficients alone.
template <class R>
DecompDegree decomposition_degree(const BivarPoly<R>& P, const BivarPoly<R>& Q, const GcdContext& ctx = {}) {
  detail::check_tridec_input(P, Q, ctx);
  return detail::degree_from_principal(principal_coeffs(P, Q), ctx);
}

struct CriticalCount {
  std::size_t count = 0;
  std::size_t degree_with_square = 0;  // degree of {(dH/dy)^2, H}
  std::size_t degree_plain = 0;        // degree of {H, dH/dy}
};

/// Critical points of H. Requires H squarefree with Lc_y(H) a nonzero constant.
template <class R>
CriticalCount count_critical_points_detail(const BivarPoly<R>& H, const GcdContext& ctx = {},
                                           bool parallel = false) {
  if (H.is_zero()) throw InvalidInput("critical points of the zero polynomial");
  if (!H.leading().is_constant()) {
    throw NonConstantLeadingCoefficient("Lc_y(H) must be a nonzero constant; shear H first");
  }
  CriticalCount out;
  if (H.deg() <= 1) return out;  // H is constant or dH/dy is a nonzero constant
  const BivarPoly<R> Hy = partial_y(H);
  const BivarPoly<R> Hy2 = Hy * Hy;

  auto plain = [&]() {
    auto s = principal_coeffs(H, Hy);
    if (s[0].is_zero()) throw NotSquarefree("H is not squarefree: Res_y(H, dH/dy) vanishes identically");
    return detail::degree_from_principal(s, ctx);
  };
  auto squared = [&]() {
    // 2(n-1) >= n for n >= 2, so (dH/dy)^2 plays the role of P.
    return detail::degree_from_principal(principal_coeffs(Hy2, H), ctx);
  };
  DecompDegree a, b;
  if (parallel && ctx.strategy == Strategy::deterministic) {
    auto fut = std::async(std::launch::async, squared);
    b = plain();
    a = fut.get();
  } else {
    b = plain();
    a = squared();
  }
  out.degree_with_square = a.value;
  out.degree_plain = b.value;
  if (a.value < b.value) throw ContractViolation("critical point count came out negative");
  out.count = a.value - b.value;
  return out;
}

template <class R>
std::size_t count_critical_points(const BivarPoly<R>& H, const GcdContext& ctx = {}) {
  return count_critical_points_detail(H, ctx).count;
}

}  // namespace sepform
