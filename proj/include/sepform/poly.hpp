#pragma once

// Dense univariate polynomials over an arbitrary coefficient ring. Nesting
// gives the multivariate types: Poly<Poly<R>> is a polynomial in an outer
// variable whose coefficients are polynomials in an inner variable.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sepform/degree.hpp"
#include "sepform/ring.hpp"

namespace sepform {

template <class C>
class Poly {
 public:
  using coeff_type = C;

  Poly() = default;

  /// Coefficients low-to-high; trailing zeros are stripped.
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(C c) { return Poly(std::vector<C>{std::move(c)}); }

  static Poly monomial(C c, std::size_t k) {
    if (sepform::is_zero(c)) return Poly();
    std::vector<C> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }

  /// Degree of a nonzero polynomial.
  std::size_t deg() const {
    if (c_.empty()) throw std::logic_error("deg() of the zero polynomial");
    return c_.size() - 1;
  }

  std::size_t size() const { return c_.size(); }

  /// Coefficient of degree i (zero beyond the stored range).
  const C& operator[](std::size_t i) const {
    static const C zero{};
    return i < c_.size() ? c_[i] : zero;
  }

  const C& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  const std::vector<C>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    normalize();
    return *this;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sepform::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Scalar multiplication.
  friend Poly operator*(const C& s, const Poly& p) {
    if (sepform::is_zero(s)) return Poly();
    std::vector<C> r(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiply by X^k.
  Poly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<C> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    Poly r;
    r.c_ = std::move(v);
    return r;
  }

 private:
  void normalize() {
    while (!c_.empty() && sepform::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
struct ring_traits<Poly<C>> {
  static constexpr bool is_field = false;
  static bool is_zero(const Poly<C>& a) { return a.is_zero(); }
  static Poly<C> one_like(const Poly<C>& a) {
    if (a.is_zero()) throw std::logic_error("one_like on the zero polynomial");
    return Poly<C>::constant(ring_traits<C>::one_like(a.leading()));
  }
  static Poly<C> from_int_like(const Poly<C>& a, long long k) {
    if (k == 0) return Poly<C>();
    return Poly<C>::constant(ring_traits<C>::from_int_like(a.leading(), k));
  }
  static Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b);
};

/// Horner evaluation at a point of the coefficient ring.
template <class C>
C evaluate(const Poly<C>& p, const C& x) {
  C acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Horner evaluation in a ring V that C converts into (e.g. Z[x] at a rational).
template <class V, class C>
V evaluate_as(const Poly<C>& p, const V& x) {
  V acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + V(p[i]);
  return acc;
}

template <class C>
Poly<C> derivative(const Poly<C>& p) {
  if (p.size() <= 1) return Poly<C>();
  std::vector<C> r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (sepform::is_zero(p[i])) continue;
    r[i - 1] = ring_traits<C>::from_int_like(p[i], static_cast<long long>(i)) * p[i];
  }
  return Poly<C>(std::move(r));
}

template <class C, class F>
auto map_coeffs(const Poly<C>& p, F&& f) {
  using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
  std::vector<D> r;
  r.reserve(p.size());
  for (const auto& c : p.coeffs()) r.push_back(f(c));
  return Poly<D>(std::move(r));
}

/// Exact division of every coefficient by a scalar (precondition: divisible).
template <class C>
Poly<C> exact_div_scalar(const Poly<C>& p, const C& s) {
  std::vector<C> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = sepform::exact_div(p[i], s);
  return Poly<C>(std::move(r));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
Poly<C> prem(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.is_zero() || a.deg() < b.deg()) return a;
  const C& lb = b.leading();
  std::vector<C> r = a.coeffs();
  const std::size_t db = b.deg();
  // One step per degree from deg a down to deg b; every step (including one
  // whose top coefficient is already zero) multiplies by lc(b).
  for (std::size_t top = r.size(); top > db; --top) {
    const C lr = r[top - 1];
    for (std::size_t i = 0; i + 1 < top; ++i) r[i] = lb * r[i];
    if (!sepform::is_zero(lr)) {
      const std::size_t shift = top - 1 - db;
      for (std::size_t j = 0; j < db; ++j) r[shift + j] = r[shift + j] - lr * b[j];
    }
    r[top - 1] = C{};
  }
  r.resize(db);
  return Poly<C>(std::move(r));
}

/// Exact quotient a / b over an integral domain (precondition: b | a).
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return Poly<C>();
  if (a.deg() < b.deg()) throw std::logic_error("exact polynomial division is not exact");
  const std::size_t db = b.deg();
  std::vector<C> r = a.coeffs();
  std::vector<C> q(a.deg() - db + 1);
  const C& lb = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const C& top = r[k + db];
    if (sepform::is_zero(top)) continue;
    C c = sepform::exact_div(top, lb);
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = r[k + j] - c * b[j];
    q[k] = std::move(c);
  }
  for (const auto& c : r) {
    if (!sepform::is_zero(c)) throw std::logic_error("exact polynomial division is not exact");
  }
  return Poly<C>(std::move(q));
}

template <class C>
Poly<C> ring_traits<Poly<C>>::exact_div(const Poly<C>& a, const Poly<C>& b) {
  return sepform::exact_div(a, b);
}

/// Euclidean division over a field: a = q * b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
  static_assert(ring_traits<F>::is_field, "divrem requires a field");
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero() || a.deg() < b.deg()) return {Poly<F>(), a};
  const std::size_t db = b.deg();
  std::vector<F> r = a.coeffs();
  std::vector<F> q(a.deg() - db + 1);
  const F inv = ring_traits<F>::one_like(b.leading()) / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const F top = r[k + db];
    if (sepform::is_zero(top)) continue;
    F c = top * inv;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = r[k + j] - c * b[j];
    q[k] = c;
  }
  r.resize(db);
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  const F inv = ring_traits<F>::one_like(p.leading()) / p.leading();
  return inv * p;
}

}  // namespace sepform
