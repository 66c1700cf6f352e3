#include "enumpw/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using enumpw::Rational;

TEST(Rational, NormalizesEagerly) {
    Rational r(mpz_class(6), mpz_class(-4));
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0).str(), "0");
    EXPECT_EQ(Rational(mpz_class(0), mpz_class(-7)).str(), "0");
    EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "5", "-5", "2/9", "-17/3", "123456789012345678901234567890/11"})
        EXPECT_EQ(Rational::parse(s).str(), s);
    EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
    EXPECT_EQ(Rational::parse("+3").str(), "3");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, Pow) {
    Rational h(mpz_class(-2), mpz_class(3));
    EXPECT_EQ(h.pow(3).str(), "-8/27");
    EXPECT_EQ(h.pow(0).str(), "1");
    EXPECT_EQ(h.pow(-2).str(), "9/4");
}

TEST(Rational, Binomials) {
    EXPECT_EQ(enumpw::binomial(5, 2), 10);
    EXPECT_EQ(enumpw::binomial(-1, 0), 0);
    EXPECT_EQ(enumpw::binomial(3, 4), 0);
    EXPECT_EQ(enumpw::binomial(3, -1), 0);
    EXPECT_EQ(enumpw::binomial_general(-1, 3), -1);
    EXPECT_EQ(enumpw::binomial_general(-2, 2), 3);
    EXPECT_EQ(enumpw::factorial(6), 720);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    auto draw = [&] { return Rational(mpz_class(num(rng)), mpz_class(den(rng))); };
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}
