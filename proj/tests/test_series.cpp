#include "enumpw/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace enumpw;

namespace {

MultiPoly A() { return MultiPoly::var(Var::A); }
MultiPoly G() { return MultiPoly::var(Var::G); }
Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

TruncSeries poly(char v, std::vector<MultiPoly> c) { return TruncSeries::polynomial(v, std::move(c)); }
TruncSeries ser(char v, std::vector<MultiPoly> c, int order) { return TruncSeries::from_coeffs(v, std::move(c), order); }

TruncSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
    std::uniform_int_distribution<int> coef(-3, 3), pick(0, 2);
    std::vector<MultiPoly> c(order);
    for (int i = zero_constant ? 1 : 0; i < order; ++i) {
        MultiPoly x = MultiPoly(Rational(coef(rng)));
        if (pick(rng) == 0) x += A() * Rational(coef(rng));
        if (pick(rng) == 0) x += G() * Rational(coef(rng));
        c[i] = x;
    }
    if (!zero_constant) c[0] = MultiPoly(Rational(coef(rng) == 0 ? 1 : 2));
    return ser('y', c, order);
}

}  // namespace

TEST(SeriesMul, Examples) {
    auto p = ser('y', {1, 1}, 5) * ser('y', {1, -1}, 5);
    EXPECT_EQ(p, ser('y', {1, 0, -1}, 5));
    auto geo = ser('y', {1, 1, 1}, 3) * poly('y', {1, -1});
    EXPECT_EQ(geo, ser('y', {1}, 3));
    auto ag = poly('y', {A(), 1}) * poly('y', {G(), 1});
    EXPECT_EQ(ag, poly('y', {A() * G(), A() + G(), 1}));
    EXPECT_THROW(poly('y', {1}) * poly('t', {1}), RingMismatch);
}

TEST(SeriesMul, PrecisionUsesValuations) {
    // y^2 (known exactly) times a series known mod y^3 is known mod y^5.
    auto p = poly('y', {0, 0, 1}) * ser('y', {1, 1, 1}, 3);
    EXPECT_EQ(p.order(), 5);
}

TEST(SeriesInv, Examples) {
    EXPECT_EQ(series_inv(poly('y', {1, -1}), 4), ser('y', {1, 1, 1, 1}, 4));
    EXPECT_EQ(series_inv(poly('y', {2})), poly('y', {q(1, 2)}));
    EXPECT_EQ(series_inv(poly('t', {1, 2}), 3), ser('t', {1, -2, 4}, 3));
    EXPECT_THROW(series_inv(poly('y', {0, 1}), 3), NotInvertible);
    EXPECT_THROW(series_inv(poly('y', {1, 1})), std::invalid_argument);
}

TEST(SeriesExp, Examples) {
    EXPECT_EQ(series_exp(ser('y', {}, 5)), ser('y', {1}, 5));
    EXPECT_EQ(series_exp(poly('y', {0, A()}), 3), ser('y', {1, A(), A() * A() * q(1, 2)}, 3));
    auto y = poly('y', {0, 1});
    EXPECT_EQ(series_exp(y, 6) * series_exp(-y, 6), ser('y', {1}, 6));
    EXPECT_THROW(series_exp(poly('y', {1, 1}), 4), std::invalid_argument);
}

TEST(SeriesHyp, Examples) {
    auto ay = poly('y', {0, A()});
    EXPECT_EQ(series_hyp(ay, Hyp::sinh, 4), ser('y', {0, A(), 0, A() * A() * A() * q(1, 6)}, 4));
    EXPECT_EQ(series_hyp(ser('y', {}, 4), Hyp::cosh), ser('y', {1}, 4));
    EXPECT_EQ(series_hyp(poly('y', {0, 1}), Hyp::tanh, 4), ser('y', {0, 1, 0, q(-1, 3)}, 4));
}

TEST(Substitute, Examples) {
    auto u2 = poly('u', {0, 0, 1});
    auto r = poly('y', {0, 1}) * series_hyp(poly('y', {0, A() * q(-1, 2)}), Hyp::tanh, 5);
    auto s = substitute(u2, r);
    EXPECT_EQ(s.var(), 'y');
    EXPECT_GE(s.order(), 5);
    EXPECT_TRUE(s.with_order(5) == ser('y', {0, 0, 0, 0, A() * A() * q(1, 4)}, 5));

    EXPECT_EQ(substitute(poly('y', {1, 1}), poly('y', {})), poly('y', {1}));

    auto onept = poly('t', {1, 1});
    auto sq = onept * onept;
    auto t_over = poly('t', {0, 1}) * series_inv(poly('t', {1, -1}), 3);
    EXPECT_TRUE(substitute(sq, t_over).with_order(3) == ser('t', {1, 2, 3}, 3));

    EXPECT_THROW(substitute(ser('y', {1, 1}, 4), poly('y', {1, 1})), std::invalid_argument);
}

TEST(SubstituteVar, ReplacesCoefficientVariable) {
    // u^2 + A y with u -> y(1+y)
    auto a = poly('y', {MultiPoly::var(Var::u, 2), A()});
    auto r = poly('y', {0, 1, 1});
    EXPECT_EQ(substitute_var(a, Var::u, r), poly('y', {0, A(), 1, 2, 1}));
}

TEST(Residue, Examples) {
    LaurentSeries inv_y(poly('y', {1}), -1);
    EXPECT_EQ(residue(inv_y), MultiPoly(1));
    LaurentSeries two(poly('y', {A(), 0, 3}), -3);
    EXPECT_EQ(residue(two), MultiPoly(3));

    auto sinh_ay = series_hyp(poly('y', {0, A()}), Hyp::sinh, 6);
    LaurentSeries den(sinh_ay.scaled(MultiPoly(4)), 2);
    LaurentSeries num(poly('y', {-(A() * A())}));
    EXPECT_EQ(residue(laurent_div(num, den)), A() * A() * A() * q(1, 24));
}

TEST(Residue, RefusesWhenPrecisionIsMissing) {
    auto sinh_ay = series_hyp(poly('y', {0, A()}), Hyp::sinh, 2);
    LaurentSeries den(sinh_ay, 2);
    LaurentSeries q1 = laurent_div(LaurentSeries(poly('y', {1})), den);
    EXPECT_THROW(residue(q1), InsufficientPrecision);
    try {
        residue(q1);
    } catch (const InsufficientPrecision& e) {
        EXPECT_EQ(e.required(), -1);
        EXPECT_EQ(e.available(), -2);
    }
}

TEST(SeriesProperties, ExpHomomorphismAndHyperbolicIdentities) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_series(rng, 6, true);
        auto b = random_series(rng, 6, true);
        EXPECT_TRUE(series_exp(a + b) == series_exp(a) * series_exp(b));
        auto s = series_hyp(a, Hyp::sinh), c = series_hyp(a, Hyp::cosh);
        EXPECT_TRUE(series_hyp(a, Hyp::tanh) == s * series_inv(c));
        EXPECT_TRUE(c * c - s * s == ser('y', {1}, 6));
    }
}

TEST(SeriesProperties, InverseIsTwoSidedAndIdentitySubstitution) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_series(rng, 7, false);
        auto ai = series_inv(a);
        EXPECT_TRUE(a * ai == ser('y', {1}, 7));
        EXPECT_TRUE(ai * a == ser('y', {1}, 7));
        EXPECT_TRUE(substitute(a, TruncSeries::identity('y')) == a);
    }
}

TEST(SeriesProperties, ResidueOfDerivativeVanishes) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentSeries s(random_series(rng, 8, false), -5);
        EXPECT_TRUE(residue(derivative(s)).is_zero());
    }
}

TEST(Laurent, DivisionTracksPoleOrder) {
    // 1/(y^2 (1 - y)) with the denominator known to y^6
    LaurentSeries den(ser('y', {1, -1}, 6), 2);
    auto q1 = laurent_div(LaurentSeries(poly('y', {1})), den);
    EXPECT_EQ(q1.shift(), -2);
    EXPECT_EQ(q1.abs_order(), 4);
    EXPECT_EQ(residue(q1), MultiPoly(1));
    EXPECT_EQ(q1.coefficient(3), MultiPoly(1));
    EXPECT_THROW(q1.coefficient(4), InsufficientPrecision);
}
