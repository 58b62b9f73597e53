#include <gtest/gtest.h>

#include <set>

#include "sepform/oracle.hpp"
#include "test_support.hpp"

using namespace sepform;
using sepform::testing::bv;

namespace {

oracle::SolutionSet<Rational> grid_points() {
  oracle::SolutionSet<Rational> s;
  for (long x : {1L, 2L})
    for (long y : {1L, 2L}) s.points.emplace_back(Rational(x), Rational(y));
  return s;
}

const BivarPoly<BigInt> kGridP = bv("x^2 - 3*x + 2");
const BivarPoly<BigInt> kGridQ = bv("y^2 - 3*y + 2");

}  // namespace

TEST(SystemToCurve, Examples) {
  auto c = system_to_curve(bv("y - x^2"), bv("y - 1"));
  EXPECT_EQ(c.alpha, 0);
  EXPECT_EQ(c.H, bv("y - x^2") * bv("y - 1"));
  auto c2 = system_to_curve(bv("x*y - 1"), bv("y - x"));
  EXPECT_GE(c2.alpha, 1);
  EXPECT_TRUE(c2.H.leading().is_constant());
  EXPECT_EQ(c2.H, shear_at(bv("x*y - 1") * bv("y - x"), c2.alpha));
  EXPECT_THROW(system_to_curve(bv("y - x") * bv("y + 1"), bv("y - x") * bv("x - 3")), PositiveDimensional);
  EXPECT_THROW(system_to_curve(bv("3"), bv("y - x")), InvalidInput);
  // Squarefree parts are used.
  auto c3 = system_to_curve(bv("y - x") * bv("y - x"), bv("y + x"));
  EXPECT_EQ(c3.H, bv("y - x") * bv("y + x"));
}

TEST(SystemToCurve, LeastAlphaInRange) {
  Rng rng(51);
  for (int t = 0; t < 30; ++t) {
    auto P = sepform::testing::random_bivar(rng, rng.uniform(1, 3), 4, 4);
    auto Q = sepform::testing::random_bivar(rng, rng.uniform(1, 3), 4, 4);
    CurveReduction c;
    try {
      c = system_to_curve(P, Q);
    } catch (const PositiveDimensional&) {
      continue;
    }
    EXPECT_LE(static_cast<std::size_t>(c.alpha), total_degree(c.H).value());
    const auto H0 = c.sqfree_P * c.sqfree_Q;
    for (long long s = 0; s < c.alpha; ++s) EXPECT_FALSE(shear_at(H0, s).leading().is_constant());
    EXPECT_TRUE(c.H.leading().is_constant());
  }
}

TEST(LuckyPrime, Examples) {
  auto lp = find_lucky_prime(bv("y^2 - x"));
  EXPECT_EQ(lp.mu, 37u);
  EXPECT_EQ(lp.N, 1u);
  EXPECT_EQ(lp.lower_bound, 32u);
  EXPECT_TRUE(verify_lucky_prime(bv("y^2 - x"), lp));

  // 37 | 37x collapses the critical values 0 and 37.
  auto lp2 = find_lucky_prime(bv("y^2 - x^2 + 37*x"));
  EXPECT_EQ(lp2.mu, 41u);
  EXPECT_EQ(lp2.N, 2u);
  EXPECT_EQ(lp2.skipped, std::vector<std::uint64_t>({37}));

  // Leading coefficient 37 y^2 kills the guard at 37.
  auto lp3 = find_lucky_prime(bv("37*y^2 - x"));
  EXPECT_NE(lp3.mu, 37u);
  EXPECT_TRUE(verify_lucky_prime(bv("37*y^2 - x"), lp3));
}

TEST(LuckyPrime, Budget) {
  SearchConfig cfg;
  cfg.max_iterations = 1;
  EXPECT_THROW(find_lucky_prime(bv("y^2 - x^2 + 37*x"), cfg), BudgetExhausted);
}

TEST(LuckyPrime, LasVegasAcceptanceSetMatchesBatch) {
  const auto H = bv("y^2 - x^2 + 37*x");
  const Poly<BigInt> ups = upsilon(H, partial_y(H));
  const std::size_t N = count_critical_points(H);
  // The first 64 primes above 2 d^4 and which of them the lucky-prime checks accept.
  std::set<std::uint64_t> batch, accepted;
  std::uint64_t p = 32;
  for (int i = 0; i < 64; ++i) {
    p = next_prime(p);
    batch.insert(p);
    auto n = lucky_prime_count(H, ups, p);
    if (n && *n == N) accepted.insert(p);
  }
  EXPECT_FALSE(accepted.count(37));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    auto lp = lasvegas_lucky_prime(H, rng);
    ASSERT_TRUE(batch.count(lp.mu)) << lp.mu;
    EXPECT_TRUE(accepted.count(lp.mu));
  }
}

TEST(LuckyPrime, LasVegasReproducible) {
  const auto H = bv("y^3 - x*y + 1");
  Rng a(9), b(9);
  EXPECT_EQ(lasvegas_lucky_prime(H, a).mu, lasvegas_lucky_prime(H, b).mu);
}

TEST(SeparatingForm, GridRejectsAlignedDirections) {
  const auto pts = grid_points();
  EXPECT_FALSE(oracle::check_separating(pts, 0, 0));
  EXPECT_FALSE(oracle::check_separating(pts, 1, 0));
  EXPECT_TRUE(oracle::check_separating(pts, 2, 0));
  // Form search on the system itself (Lc_y constant, mu lucky).
  const std::uint64_t mu = 37;
  const Poly<BigInt> ups = upsilon(kGridP, kGridQ);
  const auto Pm = reduce_mod(kGridP, mu), Qm = reduce_mod(kGridQ, mu);
  const auto um = reduce_mod(ups, mu);
  EXPECT_FALSE(count_sheared_mod(Pm, Qm, um, 0).has_value());  // Lc_y drops at a = 0
  EXPECT_EQ(count_sheared_mod(Pm, Qm, um, 1), std::optional<std::size_t>(3));
  EXPECT_EQ(count_sheared_mod(Pm, Qm, um, 2), std::optional<std::size_t>(4));
  auto f = find_separating_form_mod(kGridP, kGridQ, 4, mu, Strategy::deterministic);
  EXPECT_EQ(f.a, 2);
  EXPECT_EQ(f.rejected, std::vector<long long>({0, 1}));
}

TEST(SeparatingForm, SinglePointAcceptsZero) {
  auto f = find_separating_form_mod(bv("y - x"), bv("y - 1"), 1, 37, Strategy::deterministic);
  EXPECT_EQ(f.a, 0);
  EXPECT_EQ(f.candidates, 1u);
}

TEST(SeparatingForm, GridPipeline) {
  for (auto mode : {Strategy::deterministic, Strategy::las_vegas}) {
    Rng rng(42);
    const auto r = separating_form_full(kGridP, kGridQ, mode, &rng);
    EXPECT_EQ(r.form.N, 4u);
    EXPECT_TRUE(oracle::check_separating(grid_points(), r.form.a, r.form.alpha));
    EXPECT_TRUE(verify_lucky_prime(r.curve.H, r.lucky));
    EXPECT_TRUE(verify_form_mod(r.curve.H, partial_y(r.curve.H), r.form));
    const std::uint64_t bound = 2 * 4ull * 4 * 4 * 4;  // 2 deg(H)^4
    if (mode == Strategy::deterministic) {
      EXPECT_LT(static_cast<std::uint64_t>(r.form.a), bound);
    } else {
      EXPECT_LE(static_cast<std::uint64_t>(r.form.a), 2 * bound);
    }
  }
}

TEST(SeparatingForm, DeterministicIsReproducible) {
  auto P = bv("x^2*y - 3*x + y^2 - 1"), Q = bv("y^3 - x^2 + 2*x*y");
  auto a = separating_form(P, Q, Strategy::deterministic);
  auto b = separating_form(P, Q, Strategy::deterministic);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.mu, b.mu);
  EXPECT_EQ(a.N, b.N);
  EXPECT_EQ(a.rejected, b.rejected);
}

TEST(SeparatingForm, LasVegasSeededIsReproducible) {
  auto P = bv("x^2*y - 3*x + y^2 - 1"), Q = bv("y^3 - x^2 + 2*x*y");
  Rng r1(77), r2(77);
  auto a = separating_form(P, Q, Strategy::las_vegas, &r1);
  auto b = separating_form(P, Q, Strategy::las_vegas, &r2);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.mu, b.mu);
  EXPECT_EQ(a.rejected, b.rejected);
}

TEST(SeparatingForm, LasVegasRangeStartsAtSystemDegree) {
  auto P = bv("x^2 - 3*x + 2"), Q = bv("y^2 - 3*y + 2");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    auto r = separating_form_full(P, Q, Strategy::las_vegas, &rng);
    EXPECT_EQ(r.form.a_bound, 4u * 4 * 4 * 4 * 4);  // deg H = 4
    EXPECT_GE(r.form.a_range, 4u * 2 * 2 * 2 * 2);
    EXPECT_LE(r.form.a_range, r.form.a_bound);
    EXPECT_LE(static_cast<std::uint64_t>(r.form.a), r.form.a_range);
  }
  // No hint: draws cover the whole curve-level range.
  Rng rng(5);
  auto c = system_to_curve(P, Q);
  auto f = find_separating_form_mod(c.H, partial_y(c.H), 4, 1031, Strategy::las_vegas, &rng);
  EXPECT_EQ(f.a_range, f.a_bound);
}

TEST(SeparatingForm, InterpolatedRationalSolutions) {
  // P = prod (x - x_i), Q = y - L(x) with L interpolating y_i: solutions are
  // exactly the (x_i, y_i).
  Rng rng(52);
  for (int t = 0; t < 8; ++t) {
    const std::size_t n = rng.uniform(2, 5);
    std::vector<long> xs, ys;
    std::set<long> used;
    while (xs.size() < n) {
      long x = static_cast<long>(rng.uniform(0, 12)) - 6;
      if (used.insert(x).second) {
        xs.push_back(x);
        ys.push_back(static_cast<long>(rng.uniform(0, 12)) - 6);
      }
    }
    // Q = D * y - sum y_i * D * l_i(x) with D the common denominator.
    Poly<Rational> L;
    for (std::size_t i = 0; i < n; ++i) {
      Poly<Rational> li = Poly<Rational>::constant(Rational(ys[i]));
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const Rational inv = Rational(1) / Rational(xs[i] - xs[j]);
        li = li * Poly<Rational>(std::vector<Rational>{Rational(-xs[j]) * inv, inv});
      }
      L = L + li;
    }
    BigInt den = 1;
    for (const auto& c : L.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Term> qt = {{den, 0, 1}};
    for (std::size_t k = 0; k < L.size(); ++k) {
      Rational c = L[k] * Rational(den);
      if (c != 0) qt.push_back({BigInt(-c.get_num()), k, 0});
    }
    std::vector<Term> pt = {{BigInt(1), 0, 0}};
    BivarPoly<BigInt> P = from_terms(pt);
    for (long x : xs) P = P * from_terms(std::vector<Term>{{BigInt(1), 1, 0}, {BigInt(-x), 0, 0}});
    const BivarPoly<BigInt> Q = from_terms(qt);
    oracle::SolutionSet<Rational> pts;
    for (std::size_t i = 0; i < n; ++i) {
      pts.points.emplace_back(Rational(xs[i]), Rational(ys[i]));
      ASSERT_EQ(oracle::evaluate_rational(P, pts.points.back().first, pts.points.back().second), 0);
      ASSERT_EQ(oracle::evaluate_rational(Q, pts.points.back().first, pts.points.back().second), 0);
    }
    auto f = separating_form(P, Q, Strategy::deterministic);
    EXPECT_TRUE(oracle::check_separating(pts, f.a, f.alpha));
    Rng rng2(t);
    auto g = separating_form(P, Q, Strategy::las_vegas, &rng2);
    EXPECT_TRUE(oracle::check_separating(pts, g.a, g.alpha));
  }
}

TEST(SeparatingForm, CommutationIdentity) {
  // phi_mu(R)(t, a) = R_{mu, a}(t) with R(t, s) = Res_y(P(t - s y, y), Q(t - s y, y)).
  auto P = bv("x^2 + y^2 - 5"), Q = bv("x*y - 2");
  const TrivarPoly Ps = shear_generic(P), Qs = shear_generic(Q);
  const BivarPoly<BigInt> R = subres_sequence(Ps, Qs).resultant();  // in s over Z[t]
  for (std::uint64_t mu : {101ULL, 1009ULL}) {
    for (long a = 0; a < 6; ++a) {
      Poly<BigInt> Ra = evaluate(R, Poly<BigInt>::constant(BigInt(a)));
      const auto lhs = reduce_mod(Ra, mu);
      const auto rhs = resultant_y(shear_at(reduce_mod(P, mu), a), shear_at(reduce_mod(Q, mu), a));
      EXPECT_EQ(lhs, rhs) << "mu=" << mu << " a=" << a;
    }
  }
}

TEST(SeparatingForm, Errors) {
  EXPECT_THROW(separating_form(bv("y - x"), bv("2*y - 2*x"), Strategy::deterministic), PositiveDimensional);
  EXPECT_THROW(separating_form(bv("y"), bv("y"), Strategy::las_vegas, nullptr), ContractViolation);
  EXPECT_THROW(find_separating_form_mod(kGridP, kGridQ, 4, 36, Strategy::deterministic), InvalidModulus);
}
