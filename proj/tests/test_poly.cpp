#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace sepform;
using sepform::testing::random_uni;

namespace {

Poly<BigInt> P(std::vector<long> c) {
  std::vector<BigInt> v;
  for (auto x : c) v.emplace_back(x);
  return Poly<BigInt>(std::move(v));
}

Poly<ModInt> Pm(std::vector<long long> c, std::uint64_t mu) {
  std::vector<ModInt> v;
  for (auto x : c) v.push_back(ModInt::from_signed(x, mu));
  return Poly<ModInt>(std::move(v));
}

}  // namespace

TEST(Poly, RingAxiomsOverZ) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    auto f = random_uni(rng, rng.uniform(0, 8), 40);
    auto g = random_uni(rng, rng.uniform(0, 8), 40);
    auto h = random_uni(rng, rng.uniform(0, 8), 40);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(exact_div(f * g, g), f);
  }
}

TEST(Poly, RingAxiomsOverZmu) {
  Rng rng(2);
  const std::uint64_t mu = 1000003;
  for (int i = 0; i < 200; ++i) {
    auto f = reduce_mod(random_uni(rng, rng.uniform(0, 8), 30), mu);
    auto g = reduce_mod(random_uni(rng, rng.uniform(1, 8), 30), mu);
    auto h = reduce_mod(random_uni(rng, rng.uniform(0, 8), 30), mu);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    if (g.is_zero()) continue;
    auto [q, r] = divrem(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_TRUE(r.is_zero() || r.deg() < g.deg());
  }
}

TEST(Poly, ZeroAndDegree) {
  Poly<BigInt> z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.degree().is_minus_infinity());
  EXPECT_THROW((void)z.deg(), std::logic_error);
  EXPECT_EQ(P({1, 2, 0, 0}).deg(), 1u);
  EXPECT_TRUE(P({0, 0}).is_zero());
}

TEST(Poly, DerivativeAndEvaluate) {
  EXPECT_EQ(derivative(P({7, 3, 0, 2})), P({3, 0, 6}));
  EXPECT_TRUE(derivative(P({5})).is_zero());
  EXPECT_EQ(evaluate(P({1, -3, 1}), BigInt(2)), BigInt(-1));
}

TEST(Poly, PseudoRemainder) {
  auto a = P({1, 0, 0, 2}), b = P({1, 3});
  auto r = prem(a, b);
  // lc(b)^(deg a - deg b + 1) a = q b + r
  auto lhs = a * Poly<BigInt>::constant(BigInt(27));
  auto q = exact_div(lhs - r, b);
  EXPECT_EQ(q * b + r, lhs);
  EXPECT_TRUE(r.is_zero() || r.deg() < b.deg());
}

TEST(Poly, MonicOverField) {
  auto f = Pm({2, 4, 6}, 7);
  auto m = monic(f);
  EXPECT_EQ(m.leading(), ModInt(1, 7));
  EXPECT_EQ(m * Poly<ModInt>::constant(ModInt(6, 7)), f);
}

TEST(Poly, ExactDivisionRejectsRemainder) {
  EXPECT_THROW(exact_div(P({1, 0, 1}), P({1, 1})), std::logic_error);
}
