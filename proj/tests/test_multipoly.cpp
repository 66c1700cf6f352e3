#include "enumpw/multipoly.hpp"

#include <gtest/gtest.h>

using namespace enumpw;

namespace {
MultiPoly A() { return MultiPoly::var(Var::A); }
MultiPoly G() { return MultiPoly::var(Var::G); }
MultiPoly u() { return MultiPoly::var(Var::u); }
}  // namespace

TEST(Monomial, PackingFollowsVariableOrder) {
    Monomial ab{{Var::alpha, 1}, {Var::beta, 2}};
    EXPECT_EQ(ab.exp(Var::alpha), 1);
    EXPECT_EQ(ab.exp(Var::beta), 2);
    EXPECT_EQ(ab.exp(Var::u), 0);
    EXPECT_LT(Monomial({{Var::beta, 5}}), Monomial({{Var::alpha, 1}}));
    EXPECT_EQ((ab * ab.inverse()).key(), Monomial().key());
    EXPECT_EQ(Monomial({{Var::u, -3}}).str(), "u^(-3)");
    EXPECT_THROW(Monomial({{Var::A, 200}}), std::overflow_error);
}

TEST(MultiPoly, ArithmeticAndCancellation) {
    MultiPoly p = (A() + G()) * (A() - G());
    EXPECT_EQ(p, A() * A() - G() * G());
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((A() * Rational(0)).size(), 0u);
    EXPECT_EQ(p.coeff(Monomial{{Var::A, 2}}), Rational(1));
    EXPECT_EQ(p.coefficient(Var::G, 2), MultiPoly(-1));
}

TEST(MultiPoly, Rendering) {
    MultiPoly beta = MultiPoly::var(Var::beta);
    MultiPoly ae = MultiPoly::var(Var::alpha) * MultiPoly::var(Var::eta) * Rational(mpz_class(2), mpz_class(9));
    EXPECT_EQ((beta + ae).str(), "beta + (2/9)*alpha*eta");
    EXPECT_EQ((-beta - ae * Rational(9)).str(), "-beta - 2*alpha*eta");
    EXPECT_EQ(MultiPoly().str(), "0");
    EXPECT_EQ((MultiPoly(3) - u()).str(), "3 - u");
}

TEST(MultiPoly, TruncationDropsHeavyMonomials) {
    Truncation t;
    t.add({{Var::A, 1}, {Var::G, 3}}, 4);
    MultiPoly p = MultiPoly::mul(A() + G(), A() + G(), t);
    EXPECT_EQ(p, A() * A() + A() * G() * Rational(2));
}

TEST(MultiPoly, InvertLaurentMonomialTimesUnit) {
    Truncation t;
    t.add({{Var::A, 1}}, 5);
    // (1/u)(1 + A u / 2) inverted modulo A^6
    MultiPoly c = MultiPoly::var(Var::u, -1) + A() * Rational(mpz_class(1), mpz_class(2));
    MultiPoly inv = invert(c, t);
    EXPECT_EQ(MultiPoly::mul(c, inv, t), MultiPoly(1));
    EXPECT_EQ(invert(MultiPoly(Rational(mpz_class(2))), Truncation{}), MultiPoly(Rational(mpz_class(1), mpz_class(2))));
    EXPECT_EQ(MultiPoly::mul(invert(A(), {}), A(), {}), MultiPoly(1));
    EXPECT_THROW(invert(A() + G(), {}), NotInvertible);
    EXPECT_THROW(invert(MultiPoly(), {}), NotInvertible);
}

TEST(MultiPoly, ExpNilpotent) {
    Truncation t;
    t.add({{Var::A, 1}}, 3);
    MultiPoly e = exp_nilpotent(A(), t);
    MultiPoly expect = MultiPoly(1) + A() + A() * A() * Rational(mpz_class(1), mpz_class(2)) +
                       A() * A() * A() * Rational(mpz_class(1), mpz_class(6));
    EXPECT_EQ(e, expect);
    EXPECT_EQ(MultiPoly::mul(e, exp_nilpotent(-A(), t), t), MultiPoly(1));
    EXPECT_THROW(exp_nilpotent(MultiPoly(1), t), std::invalid_argument);
}

TEST(MultiPoly, SubstituteValue) {
    MultiPoly p = A() * A() * G() + A() * Rational(3);
    EXPECT_EQ(p.substitute(Var::A, Rational(2)), G() * Rational(4) + MultiPoly(6));
    EXPECT_EQ(p.substitute(Var::G, Rational(0)), A() * Rational(3));
}
