#pragma once

#include "enumpw/series.hpp"

#include <vector>

namespace enumpw::intersect {

enum class Role { T, Q };

// Even polynomial in y with MultiPoly coefficients. T-role polynomials may carry
// powers of u (the eta channel); Q-role polynomials must vanish to order y^2.
class WittenPolynomial {
public:
    WittenPolynomial(Role role, std::vector<MultiPoly> coeffs);

    // y^{2m} u^n
    static WittenPolynomial t_monomial(int m, int n = 0);
    static WittenPolynomial zero_t() { return WittenPolynomial(Role::T, {}); }
    // -A y^2/2 - G y^4/4
    static WittenPolynomial canonical_q();
    // -A y^2/2
    static WittenPolynomial canonical_q_a();

    Role role() const { return role_; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    TruncSeries series(char var = 'y', const Truncation& t = {}) const;
    // Smallest power of u over all terms (0 for the zero polynomial).
    int min_u_power() const;
    WittenPolynomial times_u(int e) const;

private:
    Role role_;
    std::vector<MultiPoly> coeffs_;
};

// alpha^i beta^m (4 gamma)^j eta^n
struct MonomialClass {
    int i = 0;
    int m = 0;
    int j = 0;
    int n = 0;
    int defect() const { return 2 * (m + j + n); }
    int degree() const { return 2 * i + 4 * m + 6 * j + 2 * n; }
};

// Stable bundles: Res_y T (P'')^g / (2 y^{2g-2} (e^{P'} - e^{-P'})).
MultiPoly integrate_N(int g, const WittenPolynomial& T, const WittenPolynomial& P);
// Same numbers through the f(beta) exp(u(beta) alpha + w(beta) gamma*) presentation.
MultiPoly integrate_N_zagier(int g, const WittenPolynomial& T, const WittenPolynomial& P);
// alpha^i beta^m (4 gamma)^j on the stable-bundle space (c.n must be 0).
Rational monomial_N(int g, const MonomialClass& c);

struct BoundaryResidues {
    MultiPoly at_zero;
    MultiPoly at_plus_u;
    MultiPoly at_minus_u;
    MultiPoly total() const { return at_zero + at_plus_u + at_minus_u; }
};

// The three residues of the equivariant integrand over M, with coefficients in
// Q[A, G, u^{+-1}] reduced modulo the given truncation.
BoundaryResidues equivariant_residues(int g, const WittenPolynomial& T, const WittenPolynomial& Q,
                                      const Truncation& coeff_trunc);
// Weighted (A:1, G:3) bound that makes every u^n with n < u_order exact.
int equivariant_weight_bound(int g, const WittenPolynomial& T, int u_order);
// Equivariant integral over M as a Laurent series in u, exact below u^{u_order}.
LaurentSeries equivariant_integral_M(int g, const WittenPolynomial& T, const WittenPolynomial& Q, int u_order);

MultiPoly integrate_Z_kalkman(int g, const WittenPolynomial& T, const WittenPolynomial& Q);

struct SplitTerms {
    MultiPoly double_residue;
    MultiPoly single_residue;
    MultiPoly total() const { return double_residue + single_residue; }
};
SplitTerms integrate_Z_split_terms(int g, const WittenPolynomial& T, const WittenPolynomial& Q);
MultiPoly integrate_Z_split(int g, const WittenPolynomial& T, const WittenPolynomial& Q);

// Top-defect residue; T carries the eta power beyond eta^{3g-3-2k} in its u channel.
MultiPoly integrate_Z_topdefect(int g, int k, const WittenPolynomial& T, const WittenPolynomial& Q);
// The series R_{g,k}(y) to the given order.
TruncSeries r_series(int g, int k, const WittenPolynomial& Q, int order, const Truncation& t = {});
// sum_b [y^{2b} G^b] R_{g,k} for the canonical Q, as a polynomial in A and G (read as G-tilde).
MultiPoly r_tilde_at_zero(int g, int k);

// Integral over Z of eta^{3g-3-2k} times the class.
Rational monomial_Z(int g, int k, const MonomialClass& c);

// (-1)^{a1+a2+1} 2^{-g+a1+a2} (3g-3-a1-a2-n1-n2)! (n1+n2)! C(g, n1+n2); 0 on negative arguments.
Rational closed_form_pairing(int g, int a1, int n1, int a2, int n2);

}  // namespace enumpw::intersect
