#include <gtest/gtest.h>

#include "haargap/rational.hpp"

using haargap::InvalidArgument;
using haargap::parse_rational;
using haargap::parse_rational_list;
using haargap::Rational;

TEST(Rational, ParsesFractionsIntegersAndDecimals)
{
    EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
    EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
    EXPECT_EQ(parse_rational("+3"), Rational(3));
}

TEST(Rational, RejectsMalformedLiterals)
{
    EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
    EXPECT_THROW(parse_rational("abc"), InvalidArgument);
    EXPECT_THROW(parse_rational(""), InvalidArgument);
    EXPECT_THROW(parse_rational("1."), InvalidArgument);
    EXPECT_THROW(parse_rational("1/2/3"), InvalidArgument);
}

TEST(Rational, CanonicalStringForm)
{
    EXPECT_EQ(haargap::to_string(Rational(2, 8)), "1/4");
    EXPECT_EQ(haargap::to_string(Rational(6)), "6");
    EXPECT_EQ(haargap::to_string(Rational(-3, 9)), "-1/3");
}

TEST(Rational, ParsesCommaSeparatedLists)
{
    const auto v = parse_rational_list("3,-1,-1/2,-3/2");
    ASSERT_EQ(v.size(), 4U);
    EXPECT_EQ(v[2], Rational(-1, 2));
    EXPECT_THROW(parse_rational_list("1,,2"), InvalidArgument);
}

TEST(Rational, LeadingZerosAreDecimal)
{
    EXPECT_EQ(parse_rational("010"), Rational(10));
    EXPECT_EQ(parse_rational("-007/08"), Rational(-7, 8));
    EXPECT_EQ(parse_rational("0.09"), Rational(9, 100));
    EXPECT_EQ(parse_rational("000"), Rational(0));
}
