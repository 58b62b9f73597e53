#pragma once

// Brute-force references for tests: determinantal subresultants, exhaustive
// enumeration over small prime fields, gcd multiplicity sums and direct
// separation checks. Deliberately independent of the fast paths.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "sepform/bivar.hpp"
#include "sepform/errors.hpp"
#include "sepform/gcd.hpp"
#include "sepform/poly.hpp"

namespace sepform::oracle {

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
template <class D>
D bareiss_det(std::vector<std::vector<D>> M) {
  const std::size_t n = M.size();
  if (n == 0) throw InvalidInput("determinant of an empty matrix");
  bool negate = false;
  D prev{};
  bool have_prev = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(M[piv][k])) ++piv;
    if (piv == n) return D{};
    if (piv != k) {
      std::swap(M[piv], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        D v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = have_prev ? exact_div(v, prev) : v;
      }
      M[i][k] = D{};
    }
    prev = M[k][k];
    have_prev = true;
  }
  D det = M[n - 1][n - 1];
  return negate ? D(-det) : det;
}

/// The polynomial determinant of Sylv_i(P, Q), p >= q, 0 <= i <= min(q, p-1).
template <class D>
Poly<D> sylvester_subresultant(const Poly<D>& P, const Poly<D>& Q, std::size_t i) {
  if (P.is_zero() || Q.is_zero()) throw InvalidInput("Sylvester matrix of the zero polynomial");
  const std::size_t p = P.deg(), q = Q.deg();
  if (p < q || p == 0) throw InvalidInput("Sylvester matrix requires p >= q and p >= 1");
  if (i > std::min(q, p - 1)) throw InvalidInput("subresultant index out of range");
  const std::size_t m = p + q - 2 * i;  // rows
  const std::size_t n = p + q - i;      // columns: powers p+q-1 down to i
  std::vector<std::vector<D>> rows;
  auto push_row = [&](const Poly<D>& F, std::size_t r) {
    std::vector<D> row(n);
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t power = p + q - 1 - c;
      if (power >= r) row[c] = F[power - r];
    }
    rows.push_back(std::move(row));
  };
  for (std::size_t r = q; r-- > i;) push_row(P, r);
  for (std::size_t r = p; r-- > i;) push_row(Q, r);
  std::vector<D> out(i + 1);
  for (std::size_t j = m; j <= n; ++j) {  // 1-based column j joins the first m-1
    std::vector<std::vector<D>> Mj(m, std::vector<D>(m));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c + 1 < m; ++c) Mj[r][c] = rows[r][c];
      Mj[r][m - 1] = rows[r][j - 1];
    }
    out[n - j] = bareiss_det(std::move(Mj));
  }
  return Poly<D>(std::move(out));
}

template <class F>
struct SolutionSet {
  std::vector<std::pair<F, F>> points;
};

inline constexpr std::uint64_t kMaxEnumerationModulus = 10000;

/// All (alpha, beta) in Z_mu^2 with P = Q = 0, by exhaustive evaluation.
inline SolutionSet<ModInt> enumerate_solutions_modp(const BivarPoly<ModInt>& P,
                                                    const BivarPoly<ModInt>& Q) {
  std::uint64_t mu = 0;
  for (const auto* F : {&P, &Q}) {
    if (!F->is_zero()) mu = F->leading().leading().modulus();
  }
  if (mu == 0) throw InvalidInput("cannot enumerate the solutions of two zero polynomials");
  if (mu > kMaxEnumerationModulus) throw InvalidInput("modulus too large for exhaustive enumeration");
  SolutionSet<ModInt> out;
  for (std::uint64_t a = 0; a < mu; ++a) {
    const ModInt alpha(a, mu);
    const Poly<ModInt> pa = eval_x(P, alpha), qa = eval_x(Q, alpha);
    for (std::uint64_t b = 0; b < mu; ++b) {
      const ModInt beta(b, mu);
      if (is_zero(evaluate(pa, beta)) && is_zero(evaluate(qa, beta))) out.points.emplace_back(alpha, beta);
    }
  }
  return out;
}

namespace detail {

template <class F, class R>
Poly<F> specialize_x(const BivarPoly<R>& P, const F& alpha) {
  if constexpr (std::is_same_v<F, R>) {
    return eval_x(P, alpha);
  } else {
    return eval_x_as<F>(P, alpha);
  }
}

}  // namespace detail

/// Sum over the points of mult(beta, gcd(P(alpha, y), Q(alpha, y))).
template <class F, class R>
std::size_t multiplicity_sum(const BivarPoly<R>& P, const BivarPoly<R>& Q, const SolutionSet<F>& points) {
  std::size_t total = 0;
  for (const auto& [alpha, beta] : points.points) {
    const Poly<F> pa = detail::specialize_x(P, alpha), qa = detail::specialize_x(Q, alpha);
    if (pa.is_zero() && qa.is_zero()) throw InvalidInput("both polynomials vanish on a vertical line");
    total += root_multiplicity(gcd_uni(pa, qa), beta);
  }
  return total;
}

/// True iff x + (alpha + a) y is injective on the points.
template <class F>
bool check_separating(const SolutionSet<F>& points, long long a, long long alpha) {
  std::vector<F> values;
  values.reserve(points.points.size());
  for (const auto& [x, y] : points.points) {
    F c;
    if constexpr (std::is_same_v<F, ModInt>) {
      c = ModInt::from_signed(a + alpha, x.modulus() ? x.modulus() : y.modulus());
    } else {
      c = F(static_cast<long>(a + alpha));
    }
    values.push_back(x + c * y);
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) return false;
  return true;
}

/// Exact rational value P(x, y).
inline Rational evaluate_rational(const BivarPoly<BigInt>& P, const Rational& x, const Rational& y) {
  return evaluate(eval_x_as<Rational>(P, x), y);
}

}  // namespace sepform::oracle
