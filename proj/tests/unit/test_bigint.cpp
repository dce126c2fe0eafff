#include <gtest/gtest.h>

#include "erlab/bigint.hpp"
#include "erlab/errors.hpp"
#include "oracles.hpp"

using namespace erlab;

TEST(Binomial, MatchesPascalTriangle) {
  for (long n = -2; n <= 40; ++n)
    for (long k = -2; k <= 42; ++k) EXPECT_EQ(binomial(n, k), oracle::pascal_binomial(n, k)) << n << " " << k;
}

TEST(Binomial, LargeValue) { EXPECT_EQ(to_decimal(binomial(100, 50)), "100891344545564193334812497256"); }

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(to_decimal(factorial(25)), "15511210043330985984000000");
}

TEST(FallingFactorial, Conventions) {
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(5, 5), 120);
  EXPECT_EQ(falling_factorial(5, 6), 0);
}

TEST(Power, Basic) {
  EXPECT_EQ(power(3, 0), 1);
  EXPECT_EQ(power(3, 13) * 2, 3188646);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/5"), Rational(6, 5));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(to_string(Rational(3, 2)), "3/2");
  EXPECT_THROW(parse_rational("abc"), ConfigError);
  EXPECT_THROW(parse_rational("1/0"), ConfigError);
  EXPECT_THROW(parse_rational(""), ConfigError);
}

TEST(ToU64, RangeChecked) {
  EXPECT_EQ(to_u64(BigCount(12345)), 12345u);
  EXPECT_THROW(to_u64(power(2, 64)), CapacityError);
}
