#include "enumpw/pwmatrix.hpp"

#include <gtest/gtest.h>

using namespace enumpw;
using namespace enumpw::pwmatrix;

namespace {

Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

}  // namespace

TEST(Index, CanonicalOrderAndCounts) {
    EXPECT_EQ(rows_k(2), (std::vector<PairIndex>{{0, 0}, {1, 0}, {1, 1}, {2, 0}}));
    EXPECT_EQ(cols_k(2), (std::vector<PairIndex>{{0, 0}, {1, 0}, {1, 1}}));
    EXPECT_EQ(rows_kh(3, 3).size(), 7u);
    EXPECT_EQ(rows_kh(3, 3).back(), (PairIndex{3, 3}));
    for (int k = 1; k <= 6; ++k)
        for (int h = 0; h <= k; ++h) {
            EXPECT_EQ(cols_k(k).size(), column_count(k));
            EXPECT_EQ(rows_kh(k, h).size(), row_count(k, h)) << k << " " << h;
            if (h >= k - 2) EXPECT_EQ(row_count(k, h), column_count(k) + 1);
        }
}

TEST(Mk, Examples) {
    for (long g = 2; g <= 6; ++g) {
        auto M = build_Mk(g, 1);
        ASSERT_EQ(M.m.rows(), 2u);
        ASSERT_EQ(M.m.cols(), 1u);
        EXPECT_EQ(M.m(0, 0), Rational(3 * g - 3));
        EXPECT_EQ(M.m(1, 0), Rational(1));
    }
    auto M = build_Mk(3, 2);
    EXPECT_EQ(M.m(*M.row_of({0, 0}), 2), Rational(6));
    EXPECT_THROW(build_Mk(2, 2), std::invalid_argument);
}

TEST(Mkh, HZeroMatchesMk) {
    for (int k = 1; k <= 4; ++k)
        for (long g = k + 1; g <= k + 3; ++g) {
            auto a = build_Mkh(g, k, 0), b = build_Mk(g, k);
            for (std::size_t r = 0; r < a.rows.size(); ++r) {
                auto rb = b.row_of(a.rows[r]);
                ASSERT_TRUE(rb.has_value());
                for (std::size_t c = 0; c < a.cols.size(); ++c) EXPECT_EQ(a.m(r, c), b.m(*rb, c));
            }
        }
}

TEST(Qk, HandCaseKOne) {
    // rows (0,0), (1,0): e_1(3g-3) on the off-diagonal
    auto Q = build_Qk(4, 1);
    EXPECT_EQ(Q.m(0, 0), Rational(-1));
    EXPECT_EQ(Q.m(0, 1), Rational(9));
    EXPECT_EQ(Q.m(1, 0), Rational(0));
    EXPECT_EQ(Q.m(1, 1), Rational(1));
}

TEST(Qk, SymmetricFunctionConventions) {
    EXPECT_EQ(elementary(-1, {1, 2}), Rational(0));
    EXPECT_EQ(elementary(3, {1, 2}), Rational(1));
    EXPECT_EQ(elementary(2, {2, 3, 4}), Rational(26));
    EXPECT_EQ(complete(2, {2, 3}), Rational(19));
    EXPECT_EQ(complete(0, {}), Rational(1));
    EXPECT_EQ(complete(-2, {1}), Rational(0));
}

TEST(Qk, InverseAndTriangularity) {
    for (int k = 1; k <= 6; ++k)
        for (long g = k + 1; g <= k + 4; ++g) {
            auto Q = build_Qk(g, k), Qi = build_Qk_inv(g, k);
            auto n = Q.rows.size();
            EXPECT_EQ(Q.m * Qi.m, Matrix::identity(n)) << k << " " << g;
            EXPECT_EQ(Qi.m * Q.m, Matrix::identity(n));
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_EQ(Q.m(i, i), Rational((k + Q.rows[i].a) % 2 ? -1 : 1));
                for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(Q.m(i, j).is_zero());
            }
        }
}

TEST(Sk, Examples) {
    auto S = build_Sk(1);
    EXPECT_EQ(S.m(0, 0), Rational(0));
    EXPECT_EQ(S.m(1, 0), Rational(1));
    for (int k = 1; k <= 6; ++k) {
        auto Sk = build_Sk(k);
        auto last = *Sk.row_of({k, 0});
        for (std::size_t c = 0; c < Sk.cols.size(); ++c) EXPECT_EQ(Sk.m(last, c), Rational(1));
    }
}

TEST(Factorization, NormalizedIdentity) {
    for (int k = 1; k <= 6; ++k)
        for (long g = k + 1; g <= k + 4; ++g)
            EXPECT_EQ(build_Qk(g, k).m * build_Sk(k).m, row_normalization(k) * build_Mk(g, k).m) << k << " " << g;
}

TEST(Factorization, LiteralIdentityOnlyAtKOne) {
    for (long g = 2; g <= 5; ++g) EXPECT_EQ(build_Qk(g, 1).m * build_Sk(1).m, build_Mk(g, 1).m);
    EXPECT_NE(build_Qk(3, 2).m * build_Sk(2).m, build_Mk(3, 2).m);
}

TEST(Kernel, OneDimensionalAndSpannedByClosedForms) {
    for (int k = 1; k <= 6; ++k) {
        Vector line;
        for (long g = k + 1; g <= k + 4; ++g) {
            auto M = build_Mk(g, k);
            auto ker = left_kernel(M);
            ASSERT_EQ(ker.size(), 1u) << k << " " << g;
            auto v = vk_closed_form(g, k);
            EXPECT_TRUE(is_zero(vec_mul(v, M.m)));
            EXPECT_TRUE(same_line(v, ker[0]));
            EXPECT_TRUE(same_line(vk_newton(g, k), ker[0]));
            auto w = s_frame_line(g, k, ker[0]);
            EXPECT_TRUE(same_line(w, polyvec(heat::pk(k), k, M.rows)));
            EXPECT_TRUE(left_kernel(build_Sk(k)).size() == 1 && same_line(left_kernel(build_Sk(k))[0], w));
            if (line.empty()) line = primitive(w);
            EXPECT_EQ(primitive(w), line);
            EXPECT_FALSE(ker[0][*M.row_of({k, 0})].is_zero());
        }
    }
    EXPECT_EQ(vk_closed_form(4, 1), (Vector{-1, 9}));
}

TEST(Kernel, SkhDimensionAndExtendedSystem) {
    for (int k = 1; k <= 5; ++k) {
        for (int h = 0; h <= k; ++h) {
            auto S = build_Skh(k, h);
            auto ker = left_kernel(S);
            EXPECT_EQ(ker.size(), static_cast<std::size_t>((h + 1) * (h + 2) / 2)) << k << " " << h;
            Matrix basis(ker.size(), S.rows.size());
            auto polys = heat::kernel_basis_polys(k, h);
            Matrix pm(polys.size(), S.rows.size());
            for (std::size_t i = 0; i < polys.size(); ++i) {
                auto v = polyvec(polys[i], k + h, S.rows);
                EXPECT_TRUE(is_zero(vec_mul(v, S.m)));
                pm.set_row(i, v);
            }
            EXPECT_EQ(rank(pm), ker.size());
        }
    }
    for (int k = 1; k <= 6; ++k) EXPECT_TRUE(left_kernel(build_Sk_extended(k)).empty()) << k;
}

TEST(LowestDefect, KOneClosedForm) {
    for (long g = 2; g <= 7; ++g) {
        auto F = lowest_defect_Fk(g, 1);
        MultiPoly expect = MultiPoly::var(Var::beta) +
                           MultiPoly::var(Var::alpha) * MultiPoly::var(Var::eta) * q(2, 3 * g - 3);
        EXPECT_EQ(F.poly, expect);
        EXPECT_EQ(F.defect(), 2);
    }
    EXPECT_EQ(lowest_defect_Fk(4, 1).str(), "beta + (2/9)*alpha*eta");
}

TEST(LowestDefect, NormalizedAndAnnihilating) {
    for (int k = 1; k <= 4; ++k)
        for (long g = k + 1; g <= k + 3; ++g) {
            auto F = lowest_defect_Fk(g, k);
            EXPECT_EQ(F.coeff({0, k, 0, 0}), Rational(1));
            EXPECT_EQ(F.defect(), 2 * k);
            for (const auto& p : top_defect_pairings(g, k, 0, F)) EXPECT_TRUE(p.is_zero()) << k << " " << g;
            // beta^k alone does not annihilate
            bool some = false;
            for (const auto& p : top_defect_pairings(g, k, 0, DefectClass{MultiPoly::var(Var::beta, k)}))
                some = some || !p.is_zero();
            EXPECT_TRUE(some);
        }
}

TEST(General, HZeroMatchesLowestDefect) {
    for (int k = 1; k <= 4; ++k)
        for (long g = k + 1; g <= k + 3; ++g) {
            auto s = solve_general(g, k, 0);
            ASSERT_TRUE(s.solution.has_value());
            EXPECT_EQ(s.solution->poly, lowest_defect_Fk(g, k).poly) << k << " " << g;
        }
}

TEST(General, UniqueInsideRedundancyRange) {
    for (int k = 1; k <= 4; ++k)
        for (int h = 0; h <= k; ++h)
            for (long g = k + 1; g <= k + h + 4; ++g) {
                if (!redundancy_check(g, k, h)) continue;
                auto s = solve_general(g, k, h);
                bool invertible = !determinant(build_Qtilde(g, k, h).m).is_zero();
                if (!invertible) continue;
                EXPECT_EQ(s.kernel_dim, 1u) << k << h << g;
                ASSERT_TRUE(s.solution.has_value());
                EXPECT_EQ(s.solution->coeff({0, k - h, h, 0}), Rational(1));
                EXPECT_EQ(s.solution->defect(), 2 * k);
                for (const auto& p : top_defect_pairings(g, k, h, *s.solution)) EXPECT_TRUE(p.is_zero()) << k << h << g;
            }
}

TEST(General, SmallestCaseOutsideRange) {
    EXPECT_FALSE(redundancy_check(4, 3, 3));
    EXPECT_TRUE(redundancy_check(4, 3, 2));
    for (int k = 1; k <= 5; ++k) EXPECT_TRUE(redundancy_check(k + 1, k, 0));
    auto s = solve_general(4, 3, 3);
    EXPECT_GT(s.kernel_dim, 1u);
    EXPECT_FALSE(s.solution.has_value());
    EXPECT_TRUE(determinant(build_Qtilde(4, 3, 3).m).is_zero());
}

TEST(Qtilde, KnownDeterminantsAndZeroRows) {
    EXPECT_EQ(determinant(build_Qtilde(2, 1, 0).m), Rational(-3));
    EXPECT_EQ(determinant(build_Qtilde(4, 2, 0).m), Rational(24));
    EXPECT_EQ(determinant(build_Qtilde(3, 1, 1).m), Rational(-30));
    for (int k = 1; k <= 3; ++k)
        for (int h = 0; h <= k; ++h) {
            long g = k + h + 2;
            auto Qt = build_Qtilde(g, k, h);
            auto prod = Qt.m * build_Skh(k, h).m;
            for (std::size_t r = 0; r < Qt.rows.size(); ++r) {
                bool zero = is_zero(prod.row(r));
                EXPECT_EQ(zero, Qt.rows[r].a >= k) << k << h << r;
            }
        }
}

TEST(DefectClass, Rendering) {
    DefectClass c{MultiPoly::var(Var::gamma4) * q(1, 2) - MultiPoly::var(Var::beta, 2)};
    EXPECT_EQ(c.str(), "2*gamma - beta^2");
    EXPECT_EQ(c.defect(), 2);
    EXPECT_EQ(DefectClass{}.defect(), -1);
}
