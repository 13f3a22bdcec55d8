#include <gtest/gtest.h>

#include "pentagram/rational.hpp"
#include "pentagram/rng.hpp"

using namespace pentagram;

TEST(Rational, CanonicalForm) {
    Rat r(4, -6);
    EXPECT_EQ(r.num(), -2);
    EXPECT_EQ(r.den(), 3);
    EXPECT_EQ(r.str(), "-2/3");
    EXPECT_EQ(Rat(0, 5).str(), "0");
    EXPECT_EQ(Rat(7, 1).str(), "7");
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "-17", "2/3", "-5/9", "123456789123456789/2"}) {
        Rat r = Rat::parse(s);
        EXPECT_EQ(r.str(), s);
        EXPECT_EQ(Rat::parse(r.str()), r);
    }
    // tolerant read, canonical write
    EXPECT_EQ(Rat::parse("4/-2").str(), "-2");
    EXPECT_EQ(Rat::parse("-6/-4").str(), "3/2");
    EXPECT_THROW(Rat::parse("3/0"), input_error);
    EXPECT_THROW(Rat::parse("abc"), input_error);
    EXPECT_THROW(Rat::parse("1/2/3"), input_error);
}

TEST(Rational, ExactArithmetic) {
    Rat a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rat(1, 2));
    EXPECT_EQ(a - b, Rat(1, 6));
    EXPECT_EQ(a * b, Rat(1, 18));
    EXPECT_EQ(a / b, Rat(2));
    EXPECT_THROW(a / Rat(0), algebra_error);
    EXPECT_THROW(Rat(0).inverse(), algebra_error);
}

TEST(Rational, PowAndSign) {
    EXPECT_EQ(Rat(2, 3).pow(3), Rat(8, 27));
    EXPECT_EQ(Rat(2, 3).pow(-2), Rat(9, 4));
    EXPECT_EQ(Rat(5).pow(0), Rat(1));
    EXPECT_EQ(Rat(0).pow(4), Rat(0));
    EXPECT_THROW(Rat(0).pow(-1), algebra_error);
    EXPECT_EQ(Rat(-3, 4).sign(), -1);
    EXPECT_EQ(Rat(0).sign(), 0);
}

TEST(Rational, FieldAxiomsRandom) {
    SplitMix64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Rat a(rng.in_range(-30, 30), rng.in_range(1, 17));
        Rat b(rng.in_range(-30, 30), rng.in_range(1, 17));
        Rat c(rng.in_range(-30, 30), rng.in_range(1, 17));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b - b, a);
        if (!b.is_zero()) {
            EXPECT_EQ(a * b / b, a);
        }
        // canonical invariants
        Rat s = a * b + c;
        EXPECT_GT(s.den(), 0);
        EXPECT_EQ(gcd(s.num(), s.den()), 1);
    }
}
