#include <gtest/gtest.h>

#include "vortexq/rational.hpp"

using namespace vortexq;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("2.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
}

TEST(Rational, IntegerConversion) {
  EXPECT_TRUE(is_integer(Rational(4)));
  EXPECT_FALSE(is_integer(Rational(7, 2)));
  EXPECT_EQ(to_integer(Rational(8, 2)), Integer(4));
  EXPECT_THROW(to_integer(Rational(7, 2)), IntegralityError);
  EXPECT_EQ(factorial(5), Integer(120));
}
