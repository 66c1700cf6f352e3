#include "enumpw/intersect.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace enumpw::intersect {

namespace {

Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

MultiPoly upow(int e) { return MultiPoly::var(Var::u, e); }

TruncSeries cst(char v, const MultiPoly& c, const Truncation& t) { return TruncSeries::constant(v, c, t); }

void require_genus(int g) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
}

void require_window(int g, int k) {
    require_genus(g);
    if (k < 1 || k > g - 1) throw std::invalid_argument("window k must satisfy 1 <= k <= g-1");
}

void require_q(const WittenPolynomial& Q) {
    if (Q.role() != Role::Q) throw std::invalid_argument("expected a Q-role polynomial");
    if (Q.is_zero()) throw std::invalid_argument("Q must be nonzero");
}

// Every y^p coefficient of Q only involves A and G with weight A + 3G = p - 1.
void require_homogeneous_q(const WittenPolynomial& Q) {
    const auto& c = Q.coeffs();
    for (std::size_t p = 0; p < c.size(); ++p) {
        for (const auto& [m, coef] : c[p].terms()) {
            auto e = m.exponents();
            for (int v = 0; v < kNumVars; ++v) {
                if (v == static_cast<int>(Var::A) || v == static_cast<int>(Var::G)) continue;
                if (e[v] != 0) throw std::invalid_argument("equivariant route needs Q in Q[A,G][y^2]");
            }
            if (m.exp(Var::A) + 3 * m.exp(Var::G) != static_cast<int>(p) - 1)
                throw std::invalid_argument("equivariant route needs Q homogeneous (deg A = 1, deg G = 3)");
        }
    }
}

MultiPoly residue_at_zero_M(int g, const WittenPolynomial& T, const WittenPolynomial& Q, const Truncation& t) {
    const int N = 2 * g + 2;
    auto y = TruncSeries::identity('y', t);
    auto uu = cst('y', upow(1), t);
    auto Qp = derivative(Q.series('y', t));
    auto Qpp = derivative(Qp);
    auto E = series_exp(Qp, N);
    auto Ei = series_exp(-Qp, N);
    auto ratio = (uu - y) * series_inv(uu + y, N);
    auto ratio_inv = (uu + y) * series_inv(uu - y, N);
    auto Dn = E * ratio - Ei * ratio_inv;
    auto w = uu * uu - y * y;
    auto bracket = Qpp - (uu * series_inv(w, N)).scaled(Rational(2));
    auto num = T.series('y', t) * bracket.pow(g);
    LaurentSeries den((Dn * w.pow(g - 1)).scaled(upow(g - 1) * Rational(2)), 2 * g - 2);
    return residue(laurent_div(LaurentSeries(num), den));
}

MultiPoly residue_at_point_M(int g, const WittenPolynomial& T, const WittenPolynomial& Q, const Truncation& t,
                             int sign) {
    const int N = 2 * g + 3;
    MultiPoly r = upow(1) * Rational(sign);
    auto Ys = TruncSeries::polynomial('s', {r, MultiPoly(1)}, t);
    auto Qp = derivative(Q.series('y', t));
    auto Qpp = derivative(Qp);
    auto Qp_s = substitute(Qp, Ys);
    auto Qpp_s = substitute(Qpp, Ys);
    auto T_s = substitute(T.series('y', t), Ys);
    MultiPoly c0 = Qp_s.coeffs().empty() ? MultiPoly() : Qp_s.coeffs()[0];
    auto rest = Qp_s - cst('s', c0, t);
    auto E = series_exp(rest, N).scaled(exp_nilpotent(c0, t));
    auto Ei = series_exp(-rest, N).scaled(exp_nilpotent(-c0, t));
    auto uu = cst('s', upow(1), t);
    LaurentSeries um(uu - Ys), up(uu + Ys);
    auto ratio = um * up.inverse(N);
    auto ratio_inv = up * um.inverse(N);
    auto Dn = LaurentSeries(E) * ratio - LaurentSeries(Ei) * ratio_inv;
    LaurentSeries w(uu * uu - Ys * Ys);
    auto bracket = LaurentSeries(Qpp_s) - w.inverse(N).scaled(upow(1) * Rational(2));
    auto num = LaurentSeries(T_s) * bracket.pow(g);
    auto den = (LaurentSeries(Ys.pow(2 * g - 2)) * Dn * w.pow(g - 1)).scaled(upow(g - 1) * Rational(2));
    return residue(laurent_div(num, den));
}

// y * tanh(Q'/2) to the given order.
TruncSeries y_tanh_half(const WittenPolynomial& Q, int order, const Truncation& t) {
    auto half = derivative(Q.series('y', t)).scaled(q(1, 2));
    return TruncSeries::identity('y', t) * series_hyp(half, Hyp::tanh, order);
}

}  // namespace

WittenPolynomial::WittenPolynomial(Role role, std::vector<MultiPoly> coeffs) : role_(role), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    for (std::size_t p = 1; p < coeffs_.size(); p += 2)
        if (!coeffs_[p].is_zero()) throw std::invalid_argument("Witten polynomial must be even in y");
    if (role_ == Role::Q && !coeffs_.empty() && !coeffs_[0].is_zero())
        throw std::invalid_argument("Q-role polynomial must be divisible by y^2");
}

WittenPolynomial WittenPolynomial::t_monomial(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative exponent in T monomial");
    std::vector<MultiPoly> c(2 * m + 1);
    c[2 * m] = upow(n);
    return WittenPolynomial(Role::T, std::move(c));
}

WittenPolynomial WittenPolynomial::canonical_q() {
    return WittenPolynomial(Role::Q, {MultiPoly(), MultiPoly(), MultiPoly::var(Var::A) * q(-1, 2), MultiPoly(),
                                      MultiPoly::var(Var::G) * q(-1, 4)});
}

WittenPolynomial WittenPolynomial::canonical_q_a() {
    return WittenPolynomial(Role::Q, {MultiPoly(), MultiPoly(), MultiPoly::var(Var::A) * q(-1, 2)});
}

TruncSeries WittenPolynomial::series(char var, const Truncation& t) const {
    return TruncSeries::polynomial(var, coeffs_, t);
}

int WittenPolynomial::min_u_power() const {
    int r = INT_MAX;
    for (const auto& c : coeffs_)
        if (!c.is_zero()) r = std::min(r, c.min_exp(Var::u));
    return r == INT_MAX ? 0 : r;
}

WittenPolynomial WittenPolynomial::times_u(int e) const {
    std::vector<MultiPoly> c;
    for (const auto& x : coeffs_) c.push_back(x.mul_monomial(Monomial{{Var::u, e}}));
    return WittenPolynomial(role_, std::move(c));
}

MultiPoly integrate_N(int g, const WittenPolynomial& T, const WittenPolynomial& P) {
    require_genus(g);
    require_q(P);
    auto Pp = derivative(P.series());
    auto Ppp = derivative(Pp);
    int v = Pp.valuation();
    int N = 2 * g + 2 * v;
    auto D = series_exp(Pp, N) - series_exp(-Pp, N);
    auto num = T.series() * Ppp.pow(g);
    LaurentSeries den(D.scaled(Rational(2)), 2 * g - 2);
    return residue(laurent_div(LaurentSeries(num), den));
}

MultiPoly integrate_N_zagier(int g, const WittenPolynomial& T, const WittenPolynomial& P) {
    require_genus(g);
    require_q(P);
    // P = sum_j c_j y^{2j}; f(b) = T(sqrt b), u(b) = -P''(sqrt b), w(b) = sum 4j(j-1) c_j b^{j-2}
    const auto& c = P.coeffs();
    int J = static_cast<int>(c.size() - 1) / 2;
    std::vector<MultiPoly> fy(T.coeffs().size()), uy(2 * J), arg(2 * J + 2);
    for (std::size_t p = 0; p < T.coeffs().size(); p += 2) fy[p] = T.coeffs()[p];
    for (int j = 1; j <= J; ++j) {
        MultiPoly uj = c[2 * j] * Rational(-2L * j * (2 * j - 1));
        uy[2 * (j - 1)] = uj;
        arg[2 * (j - 1) + 1] += uj;
        if (j >= 2) arg[2 * (j - 2) + 3] += c[2 * j] * Rational(4L * j * (j - 1));
    }
    auto S = TruncSeries::polynomial('y', arg);
    int v = S.valuation();
    int N = 2 * g + 2 * v;
    auto sh = series_hyp(S, Hyp::sinh, N);
    auto num = TruncSeries::polynomial('y', fy) * TruncSeries::polynomial('y', uy).pow(g);
    auto value = residue(laurent_div(LaurentSeries(num), LaurentSeries(sh, 2 * g - 2)));
    return value * (Rational(-4).pow(g - 1) * Rational(2).pow(-2 * g));
}

Rational monomial_N(int g, const MonomialClass& c) {
    if (c.n != 0) throw std::invalid_argument("eta does not live on the stable-bundle space");
    if (c.i < 0 || c.m < 0 || c.j < 0) throw std::invalid_argument("negative class exponent");
    Rational total(0);
    for (int l = 0; l <= c.j; ++l) {
        MultiPoly F = integrate_N(g, WittenPolynomial::t_monomial(c.m + l), WittenPolynomial::canonical_q());
        Rational coef = F.coeff(Monomial{{Var::A, c.i + l}, {Var::G, c.j - l}});
        if (coef.is_zero()) continue;
        Rational w = Rational(mpz_class(binomial(c.j, l) * factorial(c.i + l) * factorial(c.j - l)));
        total += (l % 2 ? -w : w) * coef;
    }
    return total;
}

BoundaryResidues equivariant_residues(int g, const WittenPolynomial& T, const WittenPolynomial& Q,
                                      const Truncation& coeff_trunc) {
    require_genus(g);
    require_q(Q);
    if (T.role() != Role::T) throw std::invalid_argument("expected a T-role polynomial");
    BoundaryResidues r;
    r.at_zero = residue_at_zero_M(g, T, Q, coeff_trunc);
    r.at_plus_u = residue_at_point_M(g, T, Q, coeff_trunc, 1);
    r.at_minus_u = residue_at_point_M(g, T, Q, coeff_trunc, -1);
    return r;
}

int equivariant_weight_bound(int g, const WittenPolynomial& T, int u_order) {
    int D = INT_MIN;
    const auto& c = T.coeffs();
    for (std::size_t p = 0; p < c.size(); ++p)
        for (const auto& [m, coef] : c[p].terms()) {
            int w = m.exp(Var::A) + 3 * m.exp(Var::G);
            D = std::max(D, u_order + 6 * g - 7 - static_cast<int>(p) - m.exp(Var::u) + w);
        }
    return D;
}

LaurentSeries equivariant_integral_M(int g, const WittenPolynomial& T, const WittenPolynomial& Q, int u_order) {
    require_genus(g);
    require_q(Q);
    require_homogeneous_q(Q);
    int D = equivariant_weight_bound(g, T, u_order);
    if (T.is_zero()) return LaurentSeries(TruncSeries::polynomial('u', {}));
    if (D < 0) return LaurentSeries(TruncSeries('u', 0), u_order);
    Truncation t;
    t.add({{Var::A, 1}, {Var::G, 3}}, D);
    MultiPoly total = equivariant_residues(g, T, Q, t).total();
    int lo = std::min(total.is_zero() ? u_order : total.min_exp(Var::u), u_order);
    std::vector<MultiPoly> body;
    for (int n = lo; n < u_order; ++n) body.push_back(total.coefficient(Var::u, n));
    return LaurentSeries(TruncSeries::from_coeffs('u', std::move(body), u_order - lo), lo);
}

MultiPoly integrate_Z_kalkman(int g, const WittenPolynomial& T, const WittenPolynomial& Q) {
    return -equivariant_integral_M(g, T, Q, 0).coefficient(-1);
}

SplitTerms integrate_Z_split_terms(int g, const WittenPolynomial& T, const WittenPolynomial& Q) {
    require_genus(g);
    require_q(Q);
    SplitTerms out;
    if (T.is_zero()) return out;
    auto y = TruncSeries::identity('y');

    if (T.min_u_power() < g - 1) {
        Truncation ut;
        ut.add({{Var::u, 1}}, g - 2);
        const int N = 10 * g - 7;
        auto yt = TruncSeries::identity('y', ut);
        auto Qp = derivative(Q.series('y', ut));
        auto Qpp = derivative(Qp);
        auto half = Qp.scaled(q(1, 2));
        auto sh = series_hyp(half, Hyp::sinh, N + 1);
        auto ch = series_hyp(half, Hyp::cosh, N + 1);
        // 1/a = coth(Q'/2)/y, 1/b = tanh(Q'/2)/y with a b = y^2
        auto a_inv = LaurentSeries(ch) * LaurentSeries(sh, 1).inverse();
        auto b_inv = LaurentSeries(sh) * LaurentSeries(ch, 1).inverse();
        std::vector<LaurentSeries> ap{a_inv}, bp{b_inv};
        for (int i = 1; i <= g - 2; ++i) {
            ap.push_back(ap.back() * a_inv);
            bp.push_back(bp.back() * b_inv);
        }
        // 1/((u-a)(u-b)) = sum u^{i+j} a^{-i-1} b^{-j-1}
        LaurentSeries F(TruncSeries::polynomial('y', {}, ut));
        for (int i = 0; i <= g - 2; ++i)
            for (int j = 0; i + j <= g - 2; ++j) F = F + (ap[i] * bp[j]).scaled(upow(i + j));
        // (u^2 - y^2)^{-(2g-2)} = y^{-(4g-4)} sum_m C(2g-3+m, m) (u/y)^{2m}
        int mmax = (g - 2) / 2;
        std::vector<MultiPoly> gb(2 * mmax + 1);
        for (int m = 0; m <= mmax; ++m) gb[2 * (mmax - m)] = upow(2 * m) * Rational(binomial(2 * g - 3 + m, m));
        LaurentSeries G2(TruncSeries::polynomial('y', gb, ut), -(4 * g - 4) - 2 * mmax);
        auto uu = cst('y', upow(1), ut);
        auto num = T.series('y', ut) * ((uu * uu - yt * yt) * Qpp - uu.scaled(Rational(2))).pow(g);
        auto inv_sinh = LaurentSeries(series_hyp(Qp, Hyp::sinh, N + 1)).inverse();
        LaurentSeries ypow(TruncSeries::polynomial('y', {MultiPoly(1)}, ut), -(2 * g - 2));
        auto L = LaurentSeries(num) * inv_sinh * F * G2 * ypow;
        out.double_residue = residue(L).coefficient(Var::u, g - 2) * q(-1, 4);
    }

    const int N = 6 * g + 2;
    auto Qp = derivative(Q.series());
    auto Qpp = derivative(Qp);
    auto half = Qp.scaled(q(1, 2));
    auto ch = series_hyp(half, Hyp::cosh, N + 1);
    auto th = series_hyp(half, Hyp::tanh, N + 1);
    auto Tsub = substitute_var(T.series(), Var::u, y * th);
    auto bracket = -(y * Qpp) - series_hyp(Qp, Hyp::sinh, N + 1);
    auto num = Tsub * ch.pow(2 * g - 4) * bracket.pow(g);
    auto den = LaurentSeries(th).pow(g - 1) * LaurentSeries(TruncSeries::polynomial('y', {MultiPoly(1)}), 6 * g - 6);
    out.single_residue = residue(laurent_div(LaurentSeries(num), den)) * q(1, 8);
    return out;
}

MultiPoly integrate_Z_split(int g, const WittenPolynomial& T, const WittenPolynomial& Q) {
    return integrate_Z_split_terms(g, T, Q).total();
}

TruncSeries r_series(int g, int k, const WittenPolynomial& Q, int order, const Truncation& t) {
    require_window(g, k);
    require_q(Q);
    auto Qp = derivative(Q.series('y', t));
    auto Qpp = derivative(Qp);
    auto half = Qp.scaled(q(1, 2));
    auto sh_over_y = series_hyp(half, Hyp::sinh, order + 1).shifted_down(1);
    auto ch = series_hyp(half, Hyp::cosh, order);
    auto sq_over_y = series_hyp(Qp, Hyp::sinh, order + 1).shifted_down(1);
    auto R = sh_over_y.pow(2 * g - 2 * k - 2) * ch.pow(2 * k - 2) * (Qpp + sq_over_y).pow(g);
    return R.scaled(Rational(g % 2 ? -1 : 1) * q(1, 8)).with_order(order);
}

MultiPoly integrate_Z_topdefect(int g, int k, const WittenPolynomial& T, const WittenPolynomial& Q) {
    require_window(g, k);
    require_q(Q);
    if (T.is_zero()) return MultiPoly();
    const int N = 4 * k - 1;
    auto R = r_series(g, k, Q, N);
    auto Tsub = substitute_var(T.series(), Var::u, y_tanh_half(Q, N, {}));
    return (Tsub * R)[4 * k - 2];
}

MultiPoly r_tilde_at_zero(int g, int k) {
    require_window(g, k);
    int top = 3 * g - 2 * k - 2;
    auto R = r_series(g, k, WittenPolynomial::canonical_q(), 2 * top + 1);
    MultiPoly out;
    for (int b = 0; b <= top; ++b) out += R[2 * b].coefficient(Var::G, b).mul_monomial(Monomial{{Var::G, b}});
    return out;
}

Rational monomial_Z(int g, int k, const MonomialClass& c) {
    require_window(g, k);
    if (c.i < 0 || c.m < 0 || c.j < 0 || c.n < 0) throw std::invalid_argument("negative class exponent");
    Truncation t;
    t.add({{Var::A, 1}}, c.i + c.j).add({{Var::G, 1}}, c.j);
    const int N = 4 * k - 1;
    auto R = r_series(g, k, WittenPolynomial::canonical_q(), N, t);
    auto H = y_tanh_half(WittenPolynomial::canonical_q(), N, t).pow(c.n) * R;
    Rational total(0);
    for (int l = 0; l <= c.j; ++l) {
        int idx = 4 * k - 2 - 2 * c.m - 2 * l;
        if (idx < 0) continue;
        Rational coef = H[idx].coeff(Monomial{{Var::A, c.i + l}, {Var::G, c.j - l}});
        if (coef.is_zero()) continue;
        Rational w = Rational(mpz_class(binomial(c.j, l) * factorial(c.i + l) * factorial(c.j - l)));
        total += (l % 2 ? -w : w) * coef;
    }
    return total;
}

Rational closed_form_pairing(int g, int a1, int n1, int a2, int n2) {
    long f = 3L * g - 3 - a1 - a2 - n1 - n2;
    long s = static_cast<long>(n1) + n2;
    if (f < 0 || s < 0) return Rational(0);
    mpz_class b = binomial(g, s);
    if (b == 0) return Rational(0);
    Rational v = Rational(mpz_class(factorial(f) * factorial(s) * b)) * Rational(2).pow(-g + a1 + a2);
    return (a1 + a2 + 1) % 2 ? -v : v;
}

}  // namespace enumpw::intersect
