#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace sepform;

TEST(Parse, Examples) {
  auto p = parse_poly("x^2*y - 5*x + 7");
  EXPECT_EQ(p, from_terms(std::vector<Term>{{BigInt(1), 2, 1}, {BigInt(-5), 1, 0}, {BigInt(7), 0, 0}}));
  EXPECT_EQ(parse_poly("-y^3"), from_terms(std::vector<Term>{{BigInt(-1), 0, 3}}));
  EXPECT_EQ(parse_poly("  3 * x * x * y^0 "), from_terms(std::vector<Term>{{BigInt(3), 2, 0}}));
  EXPECT_EQ(parse_poly("2^3*x"), from_terms(std::vector<Term>{{BigInt(8), 1, 0}}));
  EXPECT_TRUE(parse_poly("x - x").is_zero());
  EXPECT_EQ(parse_poly("t*y - 1", Variables{"t", "y"}), parse_poly("x*y - 1"));
}

TEST(Parse, HugeIntegers) {
  const std::string big = "123456789012345678901234567890123456789";
  auto p = parse_poly(big + "*x - 1");
  EXPECT_EQ(p.coeffs()[0][1], BigInt(big));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_poly("(x+y)^2"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("x +"), ParseError);
  EXPECT_THROW(parse_poly("x y"), ParseError);
  EXPECT_THROW(parse_poly("x^"), ParseError);
  EXPECT_THROW(parse_poly("2*z"), ParseError);
  EXPECT_THROW(parse_poly("t*y"), ParseError);
  EXPECT_THROW(parse_poly("x^1000001"), ParseError);
  try {
    parse_poly("x + 3*z");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Parse, RoundTrip) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    auto p = sepform::testing::random_bivar(rng, rng.uniform(0, 6), 8, 80, 50);
    EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
    EXPECT_EQ(parse_poly(to_string(p, "t", "y"), Variables{"t", "y"}), p);
  }
}
