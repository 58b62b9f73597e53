#include <gtest/gtest.h>

#include <cstdlib>

#include "sepform/sepform.hpp"

using namespace sepform;

TEST(Numbers, Primality) {
  const std::uint64_t primes[] = {2, 3, 5, 37, 41, 521, 1000003, 4294967311ULL, 2305843009213693951ULL};
  for (auto p : primes) EXPECT_TRUE(is_prime(p)) << p;
  const std::uint64_t composites[] = {0, 1, 4, 561, 1105, 3215031751ULL, 4294967297ULL};
  for (auto n : composites) EXPECT_FALSE(is_prime(n)) << n;
  EXPECT_EQ(next_prime(32), 37u);
  EXPECT_EQ(next_prime(37), 41u);
  EXPECT_EQ(prev_prime(40), 37u);
}

TEST(Numbers, ModIntField) {
  const std::uint64_t mu = 101;
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    ModInt a(rng.uniform(0, mu - 1), mu), b(rng.uniform(1, mu - 1), mu), c(rng.uniform(0, mu - 1), mu);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a - a, ModInt(0, mu));
    EXPECT_EQ(-a + a, ModInt(0, mu));
  }
  EXPECT_EQ(ModInt::from_signed(-1, mu).value(), 100u);
  EXPECT_EQ(ModInt::from_bigint(BigInt("-1000000000000000000000"), mu),
            ModInt::from_signed(-(1000000000000000000LL % 101) * (1000 % 101), mu));
  EXPECT_EQ(ModInt(100, mu).symmetric(), -1);
  EXPECT_THROW(ModInt(0, mu).inverse(), std::domain_error);
  EXPECT_THROW(ModInt(1, 5) + ModInt(1, 7), std::domain_error);
}

TEST(Numbers, UnboundZeroAdoptsModulus) {
  ModInt z;
  EXPECT_FALSE(z.is_bound());
  z += ModInt(3, 7);
  EXPECT_EQ(z.modulus(), 7u);
  EXPECT_EQ(z.value(), 3u);
}

TEST(Numbers, RequirePrime) {
  EXPECT_NO_THROW(require_prime(37));
  EXPECT_THROW(require_prime(35), InvalidModulus);
}

TEST(Rng, ReproducibleAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.uniform(10, 20);
    EXPECT_EQ(x, b.uniform(10, 20));
    EXPECT_GE(x, 10u);
    EXPECT_LE(x, 20u);
  }
  Rng c(43);
  Rng d(42);
  bool differs = false;
  for (int i = 0; i < 10; ++i) differs = differs || c.next() != d.next();
  EXPECT_TRUE(differs);
}

TEST(Rng, SeedFromEnvironment) {
  ::setenv("SEPFORM_SEED", "12345", 1);
  EXPECT_EQ(seed_from_env(), std::optional<std::uint64_t>(12345));
  ::setenv("SEPFORM_SEED", "junk", 1);
  EXPECT_FALSE(seed_from_env().has_value());
  ::unsetenv("SEPFORM_SEED");
  EXPECT_FALSE(seed_from_env().has_value());
}
