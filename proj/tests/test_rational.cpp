#include "softev/error.hpp"
#include "softev/rational.hpp"

#include <gtest/gtest.h>

using softev::ErrorKind;
using softev::ProbError;
using softev::Rational;
using softev::parse_rational;

TEST(Rational, ParsesFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("117/2000"), Rational(117, 2000));
    EXPECT_EQ(parse_rational("148/4702"), Rational(74, 2351));
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("08/10"), Rational(4, 5));
}

TEST(Rational, DecimalsAreExact) {
    EXPECT_EQ(parse_rational("0.8"), Rational(4, 5));
    EXPECT_EQ(parse_rational("0.000001"), Rational(1, 1000000));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("0.9999"), Rational(9999, 10000));
    EXPECT_EQ(parse_rational("1.0"), Rational(1));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "a", "1/", "/2", "1.2.3", "1/0", "0.x", "1e5"}) {
        EXPECT_THROW(parse_rational(bad), ProbError) << bad;
    }
    try {
        parse_rational("3/0");
        FAIL();
    } catch (const ProbError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidValue);
    }
}

TEST(Rational, FractionRenderingIsLowestTerms) {
    EXPECT_EQ(softev::to_fraction(Rational(148, 4702)), "74/2351");
    EXPECT_EQ(softev::to_fraction(Rational(0)), "0");
    EXPECT_EQ(softev::to_fraction(Rational(1)), "1");
    EXPECT_EQ(softev::to_fraction(Rational(-3, 6)), "-1/2");
}

TEST(Rational, DecimalRenderingRoundsHalfAwayFromZero) {
    EXPECT_EQ(softev::to_decimal(Rational(1, 8), 2), "0.13");
    EXPECT_EQ(softev::to_decimal(Rational(-1, 8), 2), "-0.13");
    EXPECT_EQ(softev::to_decimal(Rational(117, 2000), 4), "0.0585");
    EXPECT_EQ(softev::to_decimal(Rational(2, 3), 3), "0.667");
    EXPECT_EQ(softev::to_decimal(Rational(1), 2), "1.00");
    EXPECT_EQ(softev::to_decimal(Rational(2, 3), 0), "1");
}

TEST(Rational, RoundTo) {
    EXPECT_EQ(softev::round_to(Rational(27162, 220311), 3), Rational(123, 1000));
    EXPECT_EQ(softev::round_to(Rational(5, 1000), 2), Rational(1, 100));
    EXPECT_TRUE(softev::in_unit_interval(Rational(0)));
    EXPECT_TRUE(softev::in_unit_interval(Rational(1)));
    EXPECT_FALSE(softev::in_unit_interval(Rational(-1, 100)));
    EXPECT_FALSE(softev::in_unit_interval(Rational(101, 100)));
}
