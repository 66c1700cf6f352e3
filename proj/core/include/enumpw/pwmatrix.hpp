#pragma once

#include "enumpw/heatpoly.hpp"
#include "enumpw/intersect.hpp"
#include "enumpw/linalg.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace enumpw::pwmatrix {

struct PairIndex {
    int a = 0;
    int n = 0;
    friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

// {0 <= n <= a, a + n <= K}, ascending a + n, then ascending a.
std::vector<PairIndex> rows_k(int K);
// {0 <= n <= a <= k - 1} in the same order.
std::vector<PairIndex> cols_k(int k);
// Columns of M_k plus a + n <= k + h, then the distinguished row (k, h) last.
std::vector<PairIndex> rows_kh(int k, int h);

struct PairingMatrix {
    std::vector<PairIndex> rows;
    std::vector<PairIndex> cols;
    Matrix m;
    std::optional<std::size_t> row_of(PairIndex p) const;
};

std::size_t column_count(int k);
// c_{k,h} - floor((k-h+1)(k-h-3)/4)
std::size_t row_count(int k, int h);

PairingMatrix build_Mk(long g, int k);
PairingMatrix build_Mkh(long g, int k, int h);
PairingMatrix build_Qk(long g, int k);
PairingMatrix build_Qk_inv(long g, int k);
PairingMatrix build_Sk(int k);
// Rows of S_{k+h}, columns of S_k.
PairingMatrix build_Skh(int k, int h);
// Columns extended to a <= k.
PairingMatrix build_Sk_extended(int k);
// diag((k-a-n)! n!), with Q_k S_k = D_k M_k.
Matrix row_normalization(int k);

// e_i with e_i = 0 for i < 0 and e_i = 1 when fewer than i arguments.
Rational elementary(int i, const std::vector<long>& xs);
Rational complete(int r, const std::vector<long>& xs);

// Left kernel: basis of {v : v M = 0}.
std::vector<Vector> left_kernel(const PairingMatrix& p);
Vector vk_closed_form(long g, int k);
Vector vk_newton(long g, int k);
// v D_k^{-1} Q_k; for a kernel vector this is the coefficient line of p_k.
Vector s_frame_line(long g, int k, const Vector& v);
// Coefficients of X^n Z^{K-a-n} over the rows; throws if p has other terms.
Vector polyvec(const heat::BivarPoly& p, int K, const std::vector<PairIndex>& rows);

// Rational combination of alpha^i beta^m (4 gamma)^j eta^n, stored in Var::alpha..Var::eta.
struct DefectClass {
    MultiPoly poly;
    // Minimum defect over the monomials; -1 for the zero class.
    int defect() const;
    Rational coeff(const intersect::MonomialClass& c) const;
    // With gamma written out, e.g. "beta + (2/9)*alpha*eta".
    std::string str() const;
};

intersect::MonomialClass to_class(const Monomial& m);
Monomial to_monomial(const intersect::MonomialClass& c);

DefectClass lowest_defect_Fk(long g, int k);

// Pairings of eta^{3g-3-2k} x against the defect-(2k-2) columns, via monomial_Z.
std::vector<Rational> top_defect_pairings(long g, int k, int h, const DefectClass& x);

struct GeneralSolution {
    std::optional<DefectClass> solution;
    std::size_t kernel_dim = 0;
    bool distinguished_nonzero = false;
};

GeneralSolution solve_general(long g, int k, int h);
bool redundancy_check(long g, int k, int h);

// Q_{k+h}(g) with the rows a >= k replaced by the kernel basis coefficient vectors.
PairingMatrix build_Qtilde(long g, int k, int h);

}  // namespace enumpw::pwmatrix
