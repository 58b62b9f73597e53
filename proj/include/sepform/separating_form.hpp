#pragma once

// The top-level pipeline: reduce {P, Q} to the critical points of a curve H,
// count them, find a lucky prime, and search x + a y modulo that prime.

#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepform/bivar.hpp"
#include "sepform/errors.hpp"
#include "sepform/gcd.hpp"
#include "sepform/rng.hpp"
#include "sepform/subresultant.hpp"
#include "sepform/tridec.hpp"

namespace sepform {

struct SearchConfig {
  std::size_t prime_batch = 64;
  /// Cap on candidate primes (lucky-prime search) and candidate integers a
  /// (Las-Vegas form search). 0 means no cap.
  std::size_t max_iterations = 0;
  unsigned threads = 1;
  /// Las-Vegas form search: when nonzero, draws start in [0, 4 e^4] for this
  /// e and the range doubles after every 4 misses, up to 4 d^4.
  std::size_t start_degree = 0;
};

struct CurveReduction {
  long long alpha = 0;
  BivarPoly<BigInt> H;  // in (t, y) with t = x + alpha y
  BivarPoly<BigInt> sqfree_P, sqfree_Q;
  Poly<BigInt> L;  // Lc_y of sqfree_P * sqfree_Q sheared by s, as a polynomial in s
  std::size_t d = 0;  // max total degree of P and Q
};

struct LuckyPrime {
  std::uint64_t mu = 0;
  std::size_t N = 0;    // critical points of H over the closure of Q
  std::size_t N_mu = 0; // same count over the closure of Z_mu
  std::uint64_t lower_bound = 0;  // 2 d^4 with d = deg H
  std::size_t candidates = 0;     // primes examined, including the winner
  std::vector<std::uint64_t> skipped;
};

struct StageTimings {
  double reduction = 0, count = 0, lucky_prime = 0, form = 0;
};

struct SepForm {
  long long a = 0;      // curve-level offset: t + a y separates {H, dH/dy}
  long long alpha = 0;  // shear of the reduction
  std::uint64_t mu = 0;
  std::size_t N = 0;
  std::size_t N_a = 0;
  std::size_t candidates = 0;  // values of a examined
  std::vector<long long> rejected;
  std::uint64_t a_bound = 0;  // 2 d^4 (deterministic) or 4 d^4 (Las-Vegas)
  std::uint64_t a_range = 0;  // last Las-Vegas draw range [0, a_range]
  StageTimings timings;

  /// The separating form for the input system is x + coefficient() * y.
  long long coefficient() const { return alpha + a; }
};

namespace detail {

inline std::uint64_t two_d4(std::size_t d) {
  const std::uint64_t d2 = static_cast<std::uint64_t>(d) * d;
  return 2 * d2 * d2;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline ModInt eval_mod(const Poly<BigInt>& f, std::uint64_t mu, long long a) {
  return evaluate(reduce_mod(f, mu), ModInt::from_signed(a, mu));
}

inline void require_nonconstant(const BivarPoly<BigInt>& F, const char* name) {
  if (F.is_zero()) throw InvalidInput(std::string(name) + " is the zero polynomial");
  if (total_degree(F).value() == 0) {
    throw InvalidInput(std::string(name) + " is a nonzero constant: the system has no solutions");
  }
}

}  // namespace detail

/// Upsilon(s) = L_P(s) L_Q(s) over Z.
inline Poly<BigInt> upsilon(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q) {
  return leading_form_at_minus_s(P) * leading_form_at_minus_s(Q);
}

/// Squarefree parts, product, and the least shear making Lc_y constant.
inline CurveReduction system_to_curve(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q,
                                      const GcdContext& ctx = {}) {
  detail::require_nonconstant(P, "P");
  detail::require_nonconstant(Q, "Q");
  const BivarPoly<BigInt> g = gcd_bivar(P, Q, ctx);
  if (total_degree(g).value() > 0) {
    throw PositiveDimensional("positive-dimensional system: P and Q share the factor " + to_string(g));
  }
  CurveReduction out;
  out.d = std::max(total_degree(P).value(), total_degree(Q).value());
  out.sqfree_P = squarefree_part_bivar(P, ctx);
  out.sqfree_Q = squarefree_part_bivar(Q, ctx);
  const BivarPoly<BigInt> H0 = out.sqfree_P * out.sqfree_Q;
  out.L = leading_form_at_minus_s(H0);
  const std::size_t D = total_degree(H0).value();
  for (std::size_t s = 0; s <= D; ++s) {
    BivarPoly<BigInt> Hs = shear_at(H0, static_cast<long long>(s));
    if (Hs.leading().is_constant()) {
      out.alpha = static_cast<long long>(s);
      out.H = std::move(Hs);
      return out;
    }
  }
  throw ContractViolation("no shear in [0, deg H] makes Lc_y constant");
}

/// Checks of one candidate prime for {H, dH/dy}; returns N_mu when the
/// prime passes the Upsilon and Lc guards.
inline std::optional<std::size_t> lucky_prime_count(const BivarPoly<BigInt>& H, const Poly<BigInt>& ups,
                                                    std::uint64_t mu) {
  if (mpz_fdiv_ui(H.leading().leading().get_mpz_t(), mu) == 0) return std::nullopt;
  if (reduce_mod(ups, mu).is_zero()) return std::nullopt;
  try {
    return count_critical_points(reduce_mod(H, mu));
  } catch (const NotSquarefree&) {
    return std::nullopt;
  } catch (const InvalidModulus&) {
    return std::nullopt;
  }
}

/// Independent re-check of a LuckyPrime against H.
inline bool verify_lucky_prime(const BivarPoly<BigInt>& H, const LuckyPrime& lp) {
  const std::size_t dH = total_degree(H).value();
  if (!is_prime(lp.mu) || lp.mu <= detail::two_d4(dH)) return false;
  const Poly<BigInt> ups = upsilon(H, partial_y(H));
  if (reduce_mod(ups, lp.mu).is_zero()) return false;
  const auto n = lucky_prime_count(H, ups, lp.mu);
  return n && *n == lp.N;
}

namespace detail {

class PrimeScan {
 public:
  explicit PrimeScan(std::uint64_t above) : cur_(above) {}
  std::uint64_t next() { return cur_ = next_prime(cur_); }

 private:
  std::uint64_t cur_;
};

inline void check_budget(const SearchConfig& cfg, std::size_t used, const char* what) {
  if (cfg.max_iterations && used >= cfg.max_iterations) {
    throw BudgetExhausted(std::string(what) + ": iteration budget of " + std::to_string(cfg.max_iterations) +
                          " exhausted");
  }
}

}  // namespace detail

/// Primes above 2 d^4 in increasing order, in batches, until one reproduces
/// N. `N` is the critical count of H over Z.
inline LuckyPrime find_lucky_prime(const BivarPoly<BigInt>& H, std::size_t N, const SearchConfig& cfg = {}) {
  LuckyPrime out;
  out.N = N;
  out.lower_bound = detail::two_d4(total_degree(H).value());
  const Poly<BigInt> ups = upsilon(H, partial_y(H));
  detail::PrimeScan scan(out.lower_bound);
  const std::size_t batch = std::max<std::size_t>(cfg.prime_batch, 1);
  const unsigned threads = std::max(1u, cfg.threads);
  for (;;) {
    std::vector<std::uint64_t> primes(batch);
    for (auto& p : primes) p = scan.next();
    for (std::size_t k = 0; k < batch; k += threads) {
      const std::size_t end = std::min(batch, k + threads);
      std::vector<std::optional<std::size_t>> counts(end - k);
      if (threads == 1) {
        counts[0] = lucky_prime_count(H, ups, primes[k]);
      } else {
        std::vector<std::future<std::optional<std::size_t>>> futs;
        for (std::size_t j = k; j < end; ++j)
          futs.push_back(std::async(std::launch::async, [&, j] { return lucky_prime_count(H, ups, primes[j]); }));
        for (std::size_t j = 0; j < futs.size(); ++j) counts[j] = futs[j].get();
      }
      for (std::size_t j = k; j < end; ++j) {
        detail::check_budget(cfg, out.candidates, "lucky prime search");
        ++out.candidates;
        const auto& n = counts[j - k];
        if (n && *n == N) {
          out.mu = primes[j];
          out.N_mu = *n;
          return out;
        }
        out.skipped.push_back(primes[j]);
      }
    }
  }
}

inline LuckyPrime find_lucky_prime(const BivarPoly<BigInt>& H, const SearchConfig& cfg = {}) {
  return find_lucky_prime(H, count_critical_points(H), cfg);
}

/// Las-Vegas variant: uniform draws from a pool of primes above 2 d^4; the
/// pool doubles once half of it has been rejected.
inline LuckyPrime lasvegas_lucky_prime(const BivarPoly<BigInt>& H, std::size_t N, Rng& rng,
                                       const SearchConfig& cfg = {}) {
  LuckyPrime out;
  out.N = N;
  out.lower_bound = detail::two_d4(total_degree(H).value());
  const Poly<BigInt> ups = upsilon(H, partial_y(H));
  detail::PrimeScan scan(out.lower_bound);
  std::vector<std::uint64_t> pool;
  const std::size_t initial = std::max<std::size_t>(cfg.prime_batch, 1);
  while (pool.size() < initial) pool.push_back(scan.next());
  std::set<std::uint64_t> rejected;
  for (;;) {
    if (rejected.size() * 2 >= pool.size()) {
      const std::size_t target = pool.size() * 2;
      while (pool.size() < target) pool.push_back(scan.next());
    }
    std::uint64_t mu;
    do {
      mu = pool[rng.uniform(0, pool.size() - 1)];
    } while (rejected.count(mu));
    detail::check_budget(cfg, out.candidates, "Las-Vegas lucky prime search");
    ++out.candidates;
    const auto n = lucky_prime_count(H, ups, mu);
    if (n && *n == N) {
      out.mu = mu;
      out.N_mu = *n;
      return out;
    }
    rejected.insert(mu);
    out.skipped.push_back(mu);
  }
}

inline LuckyPrime lasvegas_lucky_prime(const BivarPoly<BigInt>& H, Rng& rng, const SearchConfig& cfg = {}) {
  GcdContext ctx{Strategy::las_vegas, &rng};
  return lasvegas_lucky_prime(H, count_critical_points(H, ctx), rng, cfg);
}

/// N_a = deg sqfree(Res_y(P_mu(t - a y, y), Q_mu(t - a y, y))) when
/// Upsilon_mu(a) != 0; nullopt when the guard fails or the resultant vanishes.
inline std::optional<std::size_t> count_sheared_mod(const BivarPoly<ModInt>& Pm, const BivarPoly<ModInt>& Qm,
                                                    const Poly<ModInt>& ups_mu, long long a) {
  const std::uint64_t mu = Pm.leading().leading().modulus();
  if (is_zero(evaluate(ups_mu, ModInt::from_signed(a, mu)))) return std::nullopt;
  const BivarPoly<ModInt> Pa = shear_at(Pm, a), Qa = shear_at(Qm, a);
  const Poly<ModInt> R = resultant_y(Pa, Qa);
  if (R.is_zero()) return std::nullopt;
  return squarefree_part_uni(R).deg();
}

/// Form search on {P, Q} with a prime mu lucky for it and the true count N.
inline SepForm find_separating_form_mod(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q, std::size_t N,
                                        std::uint64_t mu, Strategy strategy, Rng* rng = nullptr,
                                        const SearchConfig& cfg = {}) {
  require_prime(mu);
  if (strategy == Strategy::las_vegas && !rng) throw ContractViolation("Las-Vegas search without an rng");
  SepForm out;
  out.mu = mu;
  out.N = N;
  const std::size_t d = std::max(total_degree(P).value(), total_degree(Q).value());
  const std::uint64_t bound = detail::two_d4(d);
  const Poly<ModInt> ups_mu = reduce_mod(upsilon(P, Q), mu);
  if (ups_mu.is_zero()) throw ContractViolation("Upsilon vanishes modulo mu: the prime is not lucky");
  const BivarPoly<ModInt> Pm = reduce_mod(P, mu), Qm = reduce_mod(Q, mu);
  if (Pm.is_zero() || Qm.is_zero()) throw ContractViolation("input vanishes modulo mu");
  auto attempt = [&](long long a) {
    ++out.candidates;
    const auto n = count_sheared_mod(Pm, Qm, ups_mu, a);
    if (n && *n == N) {
      out.a = a;
      out.N_a = *n;
      return true;
    }
    out.rejected.push_back(a);
    return false;
  };
  if (strategy == Strategy::deterministic) {
    out.a_bound = bound;
    for (std::uint64_t a = 0; a < std::max<std::uint64_t>(bound, 1); ++a) {
      detail::check_budget(cfg, out.candidates, "form search");
      if (attempt(static_cast<long long>(a))) return out;
    }
    throw ContractViolation("no separating a below 2d^4: mu is not lucky or N is wrong");
  }
  out.a_bound = 2 * bound;
  out.a_range = out.a_bound;
  if (cfg.start_degree > 0) out.a_range = std::min(out.a_bound, 2 * detail::two_d4(cfg.start_degree));
  for (std::size_t misses = 0;; ++misses) {
    detail::check_budget(cfg, out.candidates, "Las-Vegas form search");
    if (misses == 4 && out.a_range < out.a_bound) {
      out.a_range = std::min(out.a_bound, 2 * out.a_range);
      misses = 0;
    }
    if (attempt(static_cast<long long>(rng->uniform(0, out.a_range)))) return out;
  }
}

/// Re-checks Upsilon_mu(a) != 0 and N_a = N for a returned curve-level form.
inline bool verify_form_mod(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q, const SepForm& f) {
  if (!is_prime(f.mu)) return false;
  const Poly<ModInt> ups_mu = reduce_mod(upsilon(P, Q), f.mu);
  const auto n = count_sheared_mod(reduce_mod(P, f.mu), reduce_mod(Q, f.mu), ups_mu, f.a);
  return n && *n == f.N;
}

struct PipelineResult {
  CurveReduction curve;
  LuckyPrime lucky;
  SepForm form;
};

/// The full pipeline. The returned form x + (alpha + a) y separates the
/// solutions of {P, Q} in both modes.
inline PipelineResult separating_form_full(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q,
                                           Strategy mode, Rng* rng = nullptr, const SearchConfig& cfg = {}) {
  if (mode == Strategy::las_vegas && !rng) throw ContractViolation("Las-Vegas pipeline without an rng");
  const GcdContext ctx{mode, rng};
  PipelineResult r;
  auto t0 = std::chrono::steady_clock::now();
  r.curve = system_to_curve(P, Q, ctx);
  StageTimings tm;
  tm.reduction = detail::seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const std::size_t N = count_critical_points_detail(r.curve.H, ctx, cfg.threads > 1).count;
  tm.count = detail::seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  r.lucky = mode == Strategy::deterministic ? find_lucky_prime(r.curve.H, N, cfg)
                                            : lasvegas_lucky_prime(r.curve.H, N, *rng, cfg);
  tm.lucky_prime = detail::seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const BivarPoly<BigInt> Hy = partial_y(r.curve.H);
  SearchConfig fcfg = cfg;
  if (fcfg.start_degree == 0) fcfg.start_degree = r.curve.d;
  r.form = find_separating_form_mod(r.curve.H, Hy, N, r.lucky.mu, mode, rng, fcfg);
  tm.form = detail::seconds_since(t0);
  r.form.alpha = r.curve.alpha;
  r.form.timings = tm;
  return r;
}

inline SepForm separating_form(const BivarPoly<BigInt>& P, const BivarPoly<BigInt>& Q, Strategy mode,
                               Rng* rng = nullptr, const SearchConfig& cfg = {}) {
  return separating_form_full(P, Q, mode, rng, cfg).form;
}

}  // namespace sepform
