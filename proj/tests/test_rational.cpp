#include <gtest/gtest.h>

#include <random>

#include "expdist/error.hpp"
#include "expdist/rational.hpp"
#include "support.hpp"

namespace expdist {
namespace {

using testing::R;

TEST(Rational, AddsExactly) { EXPECT_EQ(R(1, 2) + R(1, 3), R(5, 6)); }

TEST(Rational, Canonicalizes) {
  const Rational r = R(2, 4) * 1;
  EXPECT_EQ(r, R(1, 2));
  EXPECT_EQ(r.numerator(), 1);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(R(3, -6).to_string(), "-1/2");
  EXPECT_EQ(R(4, 2).to_string(), "2");
  EXPECT_EQ(R(0, -5).to_string(), "0");
}

TEST(Rational, DivisionByZeroThrows) {
  try {
    (void)(R(1, 2) / R(0));
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    EXPECT_EQ(e.name(), "DivisionByZero");
  }
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(R(0).inverse(), Error);
}

TEST(Rational, ParsesLiterals) {
  EXPECT_EQ(Rational::parse("3/7"), R(3, 7));
  EXPECT_EQ(Rational::parse("-2/3"), R(-2, 3));
  EXPECT_EQ(Rational::parse("6/4"), R(3, 2));
  EXPECT_EQ(Rational::parse("5"), R(5));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").to_string(), "41152263004115226300411522630");
  for (const char* bad : {"", "/", "1/", "/2", "a", "1.5", "1/2/3", "--1", "+1", " 1"}) {
    try {
      (void)Rational::parse(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
  try {
    (void)Rational::parse("1/0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Rational, PowersAndOrdering) {
  EXPECT_EQ(R(-2, 3).pow(3), R(-8, 27));
  EXPECT_EQ(R(5, 4).pow(0), R(1));
  EXPECT_LT(R(1, 3), R(1, 2));
  EXPECT_GT(R(-1, 3), R(-1, 2));
  EXPECT_EQ(R(-3, 4).abs(), R(3, 4));
  EXPECT_EQ(R(-3, 4).sign(), -1);
  EXPECT_TRUE(R(6, 3).is_integer());
}

TEST(RationalProperty, ArithmeticStaysCanonicalAndRoundTrips) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    for (const Rational& c : {a + b, a - b, a * b}) {
      EXPECT_TRUE(is_canonical(c));
      EXPECT_EQ(Rational::parse(c.to_string()), c);
    }
    if (!b.is_zero()) {
      const Rational c = a / b;
      EXPECT_TRUE(is_canonical(c));
      EXPECT_EQ(c * b, a);
    }
    EXPECT_EQ((a + b) - b, a);
  }
}

}  // namespace
}  // namespace expdist
