#pragma once

// Bivariate and trivariate polynomials as nested dense univariate ones.
//
//   BivarPoly<R> = Poly<Poly<R>>: outer variable y, inner variable x (or t
//                  after shearing). p[j][i] is the coefficient of x^i y^j.
//   TrivarPoly   = Poly<BivarPoly<BigInt>>: outer y, then s, inner t, i.e.
//                  T[j][k][i] is the coefficient of t^i s^k y^j.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sepform/errors.hpp"
#include "sepform/numbers.hpp"
#include "sepform/poly.hpp"

namespace sepform {

template <class R>
using UniPoly = Poly<R>;

template <class R>
using BivarPoly = Poly<Poly<R>>;

using TrivarPoly = Poly<BivarPoly<BigInt>>;

struct Term {
  BigInt coeff;
  std::size_t x_exp = 0;
  std::size_t y_exp = 0;
};

template <class R = BigInt>
BivarPoly<R> from_terms(const std::vector<Term>& terms) {
  std::size_t dy = 0;
  for (const auto& t : terms) dy = std::max(dy, t.y_exp);
  std::vector<std::vector<R>> grid(dy + 1);
  for (const auto& t : terms) {
    auto& row = grid[t.y_exp];
    if (row.size() <= t.x_exp) row.resize(t.x_exp + 1);
    row[t.x_exp] = row[t.x_exp] + R(t.coeff);
  }
  std::vector<Poly<R>> ys;
  ys.reserve(grid.size());
  for (auto& row : grid) ys.emplace_back(std::move(row));
  return BivarPoly<R>(std::move(ys));
}

template <class R>
std::vector<std::tuple<R, std::size_t, std::size_t>> to_terms(const BivarPoly<R>& p) {
  std::vector<std::tuple<R, std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p[j].size(); ++i) {
      if (!is_zero(p[j][i])) out.emplace_back(p[j][i], i, j);
    }
  }
  return out;
}

/// A polynomial in x alone, viewed as bivariate.
template <class R>
BivarPoly<R> lift_x(const Poly<R>& f) {
  return BivarPoly<R>::constant(f);
}

/// A univariate polynomial reinterpreted as a polynomial in y alone.
template <class R>
BivarPoly<R> lift_y(const Poly<R>& f) {
  std::vector<Poly<R>> ys;
  for (const auto& c : f.coeffs()) ys.push_back(is_zero(c) ? Poly<R>() : Poly<R>::constant(c));
  return BivarPoly<R>(std::move(ys));
}

template <class R>
Degree total_degree(const BivarPoly<R>& p) {
  Degree best = Degree::minus_infinity();
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    best = std::max(best, Degree(p[j].deg() + j));
  }
  return best;
}

template <class R>
Degree degree_x(const BivarPoly<R>& p) {
  Degree best = Degree::minus_infinity();
  for (const auto& c : p.coeffs()) best = std::max(best, c.degree());
  return best;
}

/// Lc_y(p) as a polynomial in x.
template <class R>
const Poly<R>& lc_y(const BivarPoly<R>& p) {
  return p.leading();
}

template <class R>
BivarPoly<R> partial_y(const BivarPoly<R>& p) {
  return derivative(p);
}

template <class R>
BivarPoly<R> partial_x(const BivarPoly<R>& p) {
  std::vector<Poly<R>> ys;
  for (const auto& c : p.coeffs()) ys.push_back(derivative(c));
  return BivarPoly<R>(std::move(ys));
}

/// p(alpha, y) as a polynomial in y.
template <class R>
Poly<R> eval_x(const BivarPoly<R>& p, const R& alpha) {
  std::vector<R> ys;
  ys.reserve(p.size());
  for (const auto& c : p.coeffs()) ys.push_back(evaluate(c, alpha));
  return Poly<R>(std::move(ys));
}

/// p(x, beta) as a polynomial in x.
template <class R>
Poly<R> eval_y(const BivarPoly<R>& p, const R& beta) {
  Poly<R> acc;
  for (std::size_t j = p.size(); j-- > 0;) acc = Poly<R>::constant(beta) * acc + p[j];
  return acc;
}

template <class R>
R evaluate(const BivarPoly<R>& p, const R& alpha, const R& beta) {
  return evaluate(eval_x(p, alpha), beta);
}

/// p(alpha, y) with alpha in a ring V that R converts into.
template <class V, class R>
Poly<V> eval_x_as(const BivarPoly<R>& p, const V& alpha) {
  std::vector<V> ys;
  for (const auto& c : p.coeffs()) ys.push_back(evaluate_as<V>(c, alpha));
  return Poly<V>(std::move(ys));
}

inline Poly<ModInt> reduce_mod(const Poly<BigInt>& f, std::uint64_t mu) {
  require_prime(mu);
  return map_coeffs(f, [mu](const BigInt& c) { return ModInt::from_bigint(c, mu); });
}

/// phi_mu applied coefficient-wise. Degrees may drop; the result is canonical.
inline BivarPoly<ModInt> reduce_mod(const BivarPoly<BigInt>& p, std::uint64_t mu) {
  require_prime(mu);
  std::vector<Poly<ModInt>> ys;
  ys.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    ys.push_back(map_coeffs(c, [mu](const BigInt& v) { return ModInt::from_bigint(v, mu); }));
  }
  return BivarPoly<ModInt>(std::move(ys));
}

/// Symmetric lift of a Z_mu polynomial to Z.
inline Poly<BigInt> lift_symmetric(const Poly<ModInt>& f) {
  return map_coeffs(f, [](const ModInt& c) { return BigInt(static_cast<long>(c.symmetric())); });
}

/// p(t - a*y, y) for a in the coefficient ring; the result is in (t, y).
template <class R>
BivarPoly<R> shear_at(const BivarPoly<R>& p, const R& a) {
  if (p.is_zero()) return p;
  const std::size_t dx = degree_x(p).value();
  const std::size_t dy = p.deg();
  // row[i][k] = coefficient of t^(i-k) y^k in (t - a y)^i
  const R minus_a = -a;
  std::vector<std::vector<R>> row(dx + 1);
  row[0] = {ring_traits<R>::one_like(p.leading().leading())};
  for (std::size_t i = 1; i <= dx; ++i) {
    row[i].assign(i + 1, R{});
    for (std::size_t k = 0; k <= i; ++k) {
      R v{};
      if (k < i) v = row[i - 1][k];
      if (k > 0) v = v + minus_a * row[i - 1][k - 1];
      row[i][k] = v;
    }
  }
  std::vector<std::vector<R>> grid(dy + dx + 1, std::vector<R>(dx + 1));
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p[j].size(); ++i) {
      const R& c = p[j][i];
      if (is_zero(c)) continue;
      for (std::size_t k = 0; k <= i; ++k) {
        if (is_zero(row[i][k])) continue;
        grid[j + k][i - k] = grid[j + k][i - k] + c * row[i][k];
      }
    }
  }
  std::vector<Poly<R>> ys;
  ys.reserve(grid.size());
  for (auto& g : grid) ys.emplace_back(std::move(g));
  return BivarPoly<R>(std::move(ys));
}

inline BivarPoly<BigInt> shear_at(const BivarPoly<BigInt>& p, long long a) {
  return shear_at(p, BigInt(static_cast<long>(a)));
}

inline BivarPoly<ModInt> shear_at(const BivarPoly<ModInt>& p, long long a) {
  if (p.is_zero()) return p;
  return shear_at(p, ModInt::from_signed(a, p.leading().leading().modulus()));
}

/// p(t - s*y, y) fully expanded in (t, s, y).
inline TrivarPoly shear_generic(const BivarPoly<BigInt>& p) {
  if (p.is_zero()) return TrivarPoly();
  const std::size_t dx = degree_x(p).value();
  const std::size_t dy = p.deg();
  // binom[i][k] * (-1)^k = coefficient of t^(i-k) s^k y^k in (t - s y)^i
  std::vector<std::vector<BigInt>> binom(dx + 1);
  for (std::size_t i = 0; i <= dx; ++i) {
    binom[i].assign(i + 1, BigInt(1));
    for (std::size_t k = 1; k < i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
  }
  // grid[y][s][t]
  std::vector<std::vector<std::vector<BigInt>>> grid(
      dy + dx + 1, std::vector<std::vector<BigInt>>(dx + 1, std::vector<BigInt>(dx + 1)));
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p[j].size(); ++i) {
      const BigInt& c = p[j][i];
      if (c == 0) continue;
      for (std::size_t k = 0; k <= i; ++k) {
        BigInt term = c * binom[i][k];
        if (k % 2) term = -term;
        grid[j + k][k][i - k] += term;
      }
    }
  }
  std::vector<BivarPoly<BigInt>> ys;
  for (auto& sgrid : grid) {
    std::vector<Poly<BigInt>> ss;
    for (auto& tvec : sgrid) ss.emplace_back(std::move(tvec));
    ys.emplace_back(std::move(ss));
  }
  return TrivarPoly(std::move(ys));
}

/// T(t, a, y) as a polynomial in (t, y).
inline BivarPoly<BigInt> specialize_s(const TrivarPoly& T, const BigInt& a) {
  std::vector<Poly<BigInt>> ys;
  ys.reserve(T.size());
  for (const auto& coeff_ts : T.coeffs()) {
    // coeff_ts is a polynomial in s with coefficients in Z[t]
    ys.push_back(evaluate(coeff_ts, Poly<BigInt>::constant(a)));
  }
  return BivarPoly<BigInt>(std::move(ys));
}

/// L(s) = Lc_y(p(t - s y, y)); it does not depend on t.
inline Poly<BigInt> sheared_leading_coefficient(const TrivarPoly& T) {
  if (T.is_zero()) return Poly<BigInt>();
  const BivarPoly<BigInt>& top = T.leading();
  std::vector<BigInt> out;
  for (const auto& tpoly : top.coeffs()) {
    if (tpoly.size() > 1) throw ContractViolation("sheared leading coefficient depends on t");
    out.push_back(tpoly[0]);
  }
  return Poly<BigInt>(std::move(out));
}

inline Poly<BigInt> sheared_leading_coefficient(const BivarPoly<BigInt>& p) {
  return sheared_leading_coefficient(shear_generic(p));
}

/// Top-degree homogeneous part evaluated at (x, y) = (-s, 1): an independent
/// route to L(s) that avoids the full shear.
inline Poly<BigInt> leading_form_at_minus_s(const BivarPoly<BigInt>& p) {
  if (p.is_zero()) return {};
  const std::size_t d = total_degree(p).value();
  std::vector<BigInt> out(d + 1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (d < j) continue;
    const std::size_t i = d - j;
    const BigInt& c = p[j][i];
    if (c == 0) continue;
    out[i] += (i % 2) ? BigInt(-c) : c;
  }
  return Poly<BigInt>(std::move(out));
}

namespace detail {

template <class R>
std::string coeff_str(const R& c) {
  return ring_traits<R>::to_string(c);
}

inline std::string monomial_str(const std::string& v, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

inline void append_term(std::ostringstream& os, bool first, std::string coeff,
                        const std::string& mono) {
  bool negative = !coeff.empty() && coeff[0] == '-';
  if (negative) coeff = coeff.substr(1);
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (mono.empty()) {
    os << coeff;
  } else if (coeff == "1") {
    os << mono;
  } else {
    os << coeff << "*" << mono;
  }
}

}  // namespace detail

/// Canonical text form, terms by decreasing total degree then decreasing
/// x-degree. The output parses back with parse_poly.
template <class R>
std::string to_string(const BivarPoly<R>& p, const std::string& vx = "x", const std::string& vy = "y") {
  if (p.is_zero()) return "0";
  std::vector<std::tuple<std::size_t, std::size_t>> keys;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p[j].size(); ++i) {
      if (!is_zero(p[j][i])) keys.emplace_back(i, j);
    }
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    auto [ai, aj] = a;
    auto [bi, bj] = b;
    if (ai + aj != bi + bj) return ai + aj > bi + bj;
    return ai > bi;
  });
  std::ostringstream os;
  bool first = true;
  for (auto [i, j] : keys) {
    std::string mono = detail::monomial_str(vx, i);
    std::string my = detail::monomial_str(vy, j);
    if (!mono.empty() && !my.empty()) mono += "*";
    mono += my;
    detail::append_term(os, first, detail::coeff_str(p[j][i]), mono);
    first = false;
  }
  return os.str();
}

template <class R>
std::string to_string(const Poly<R>& f, const std::string& v = "x") {
  return to_string(lift_x(f), v, "y");
}

}  // namespace sepform
