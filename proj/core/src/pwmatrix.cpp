#include "enumpw/pwmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace enumpw::pwmatrix {

namespace {

Rational sgn_pow(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

std::vector<long> range(long lo, long hi) {
    std::vector<long> v;
    for (long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

Matrix s_matrix(int K, const std::vector<PairIndex>& rows, const std::vector<PairIndex>& cols) {
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto [a1, n1] = rows[r];
            auto [a2, n2] = cols[c];
            m(r, c) = Rational(n2).pow(n1) * Rational(a2 + n2).pow(K - n1 - a1);
        }
    return m;
}

Matrix m_matrix(long g, int K, const std::vector<PairIndex>& rows, const std::vector<PairIndex>& cols) {
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto [a1, n1] = rows[r];
            auto [a2, n2] = cols[c];
            m(r, c) = Rational(mpz_class(binomial(3 * g - 3 - a1 - n1 - a2 - n2, K - a1 - n1) * binomial(g - n2, n1)));
        }
    return m;
}

MultiPoly class_monomial(int i, int m, int j, int n, const Rational& c) {
    return MultiPoly(Monomial{{Var::alpha, i}, {Var::beta, m}, {Var::gamma4, j}, {Var::eta, n}}, c);
}

}  // namespace

std::vector<PairIndex> rows_k(int K) {
    std::vector<PairIndex> v;
    for (int s = 0; s <= K; ++s)
        for (int n = s / 2; n >= 0; --n) v.push_back({s - n, n});
    return v;
}

std::vector<PairIndex> cols_k(int k) {
    std::vector<PairIndex> v;
    for (int s = 0; s <= 2 * k; ++s)
        for (int n = s / 2; n >= 0; --n)
            if (s - n <= k - 1) v.push_back({s - n, n});
    return v;
}

std::vector<PairIndex> rows_kh(int k, int h) {
    std::vector<PairIndex> v;
    for (auto p : cols_k(k))
        if (p.a + p.n <= k + h) v.push_back(p);
    v.push_back({k, h});
    return v;
}

std::optional<std::size_t> PairingMatrix::row_of(PairIndex p) const {
    auto it = std::find(rows.begin(), rows.end(), p);
    if (it == rows.end()) return std::nullopt;
    return static_cast<std::size_t>(it - rows.begin());
}

std::size_t column_count(int k) { return static_cast<std::size_t>(k) * (k + 1) / 2; }

std::size_t row_count(int k, int h) {
    return column_count(k) - floor_div(static_cast<long>(k - h + 1) * (k - h - 3), 4);
}

PairingMatrix build_Mk(long g, int k) {
    require(k >= 1 && g >= k + 1, "M_k needs g >= k + 1 >= 2");
    PairingMatrix p{rows_k(k), cols_k(k), {}};
    p.m = m_matrix(g, k, p.rows, p.cols);
    return p;
}

PairingMatrix build_Mkh(long g, int k, int h) {
    require(k >= 1 && g >= k + 1, "M_{k,h} needs g >= k + 1 >= 2");
    require(h >= 0 && h <= k, "M_{k,h} needs 0 <= h <= k");
    PairingMatrix p{rows_kh(k, h), cols_k(k), {}};
    p.m = m_matrix(g, k + h, p.rows, p.cols);
    return p;
}

Rational elementary(int i, const std::vector<long>& xs) {
    if (i < 0) return Rational(0);
    if (static_cast<int>(xs.size()) < i) return Rational(1);
    std::vector<mpz_class> e(i + 1);
    e[0] = 1;
    for (long x : xs)
        for (int d = i; d >= 1; --d) e[d] += e[d - 1] * x;
    return Rational(e[i]);
}

Rational complete(int r, const std::vector<long>& xs) {
    if (r < 0) return Rational(0);
    std::vector<mpz_class> h(r + 1);
    h[0] = 1;
    for (long x : xs)
        for (int d = 1; d <= r; ++d) h[d] += h[d - 1] * x;
    return Rational(h[r]);
}

PairingMatrix build_Qk(long g, int k) {
    require(g >= 2 && k >= 0, "Q_k needs g >= 2");
    auto rows = rows_k(k);
    PairingMatrix p{rows, rows, Matrix(rows.size(), rows.size())};
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows.size(); ++c) {
            auto [a, n] = rows[r];
            auto [b, m] = rows[c];
            p.m(r, c) = sgn_pow(k + b) * elementary(b + m - a - n, range(3 * g - 2 - k, 3 * g - 3 - a - n)) *
                        elementary(n - m, range(g - n + 1, g));
        }
    return p;
}

PairingMatrix build_Qk_inv(long g, int k) {
    require(g >= 2 && k >= 0, "Q_k needs g >= 2");
    auto rows = rows_k(k);
    PairingMatrix p{rows, rows, Matrix(rows.size(), rows.size())};
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows.size(); ++c) {
            auto [a, n] = rows[r];
            auto [b, m] = rows[c];
            p.m(r, c) = sgn_pow(k + b) * complete(b + m - a - n, range(3 * g - 2 - k, 3 * g - 2 - b - m)) *
                        complete(n - m, range(g - m, g));
        }
    return p;
}

PairingMatrix build_Sk(int k) {
    PairingMatrix p{rows_k(k), cols_k(k), {}};
    p.m = s_matrix(k, p.rows, p.cols);
    return p;
}

PairingMatrix build_Skh(int k, int h) {
    require(h >= 0 && h <= k, "S_{k,h} needs 0 <= h <= k");
    PairingMatrix p{rows_k(k + h), cols_k(k), {}};
    p.m = s_matrix(k + h, p.rows, p.cols);
    return p;
}

PairingMatrix build_Sk_extended(int k) {
    PairingMatrix p{rows_k(k), cols_k(k + 1), {}};
    p.m = s_matrix(k, p.rows, p.cols);
    return p;
}

Matrix row_normalization(int k) {
    Vector d;
    for (auto [a, n] : rows_k(k)) d.emplace_back(mpz_class(factorial(k - a - n) * factorial(n)));
    return Matrix::diagonal(d);
}

std::vector<Vector> left_kernel(const PairingMatrix& p) { return nullspace(p.m.transpose()); }

Vector vk_closed_form(long g, int k) {
    require(k >= 1 && g >= k + 1, "v_k needs g >= k + 1");
    Vector v;
    for (auto [a, n] : rows_k(k)) {
        int d = a - n;
        mpz_class s = 0;
        for (int i = 0; i <= d; ++i)
            s += binomial_general(g - k - 2, d - i) * binomial_general(g - n, i) * (mpz_class(1) << i);
        v.push_back(sgn_pow(k - a - n) * Rational(s));
    }
    return v;
}

Vector vk_newton(long g, int k) {
    require(k >= 1 && g >= k + 1, "v_k needs g >= k + 1");
    heat::BivarPoly p = heat::pk(k);
    Rational x(g), z(3 * g - k - 2);
    Vector v;
    for (auto [a, n] : rows_k(k)) {
        auto f = heat::diff(heat::diff(p, heat::DiffOp::DZ, k - a - n), heat::DiffOp::DXm1, n);
        v.push_back(sgn_pow(k - a - n) * f.eval(x, z));
    }
    return v;
}

Vector s_frame_line(long g, int k, const Vector& v) {
    Matrix d = row_normalization(k);
    Vector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / d(i, i);
    return vec_mul(w, build_Qk(g, k).m);
}

Vector polyvec(const heat::BivarPoly& p, int K, const std::vector<PairIndex>& rows) {
    Vector v;
    std::size_t used = 0;
    for (auto [a, n] : rows) {
        Rational c = p.coeff(n, K - a - n);
        if (!c.is_zero()) ++used;
        v.push_back(c);
    }
    if (used != p.terms().size()) throw std::logic_error("polynomial has terms outside the row monomials");
    return v;
}

intersect::MonomialClass to_class(const Monomial& m) {
    return {m.exp(Var::alpha), m.exp(Var::beta), m.exp(Var::gamma4), m.exp(Var::eta)};
}

Monomial to_monomial(const intersect::MonomialClass& c) {
    return Monomial{{Var::alpha, c.i}, {Var::beta, c.m}, {Var::gamma4, c.j}, {Var::eta, c.n}};
}

int DefectClass::defect() const {
    int d = -1;
    for (const auto& [m, c] : poly.terms()) {
        int x = to_class(m).defect();
        if (d < 0 || x < d) d = x;
    }
    return d;
}

Rational DefectClass::coeff(const intersect::MonomialClass& c) const { return poly.coeff(to_monomial(c)); }

std::string DefectClass::str() const {
    if (poly.is_zero()) return "0";
    static const char* names[] = {"alpha", "beta", "gamma", "eta"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c0] : poly.terms()) {
        auto cl = to_class(m);
        Rational c = c0 * Rational(4).pow(cl.j);
        Rational a = c.sign() < 0 ? -c : c;
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        first = false;
        std::string mono;
        int e[] = {cl.i, cl.m, cl.j, cl.n};
        for (int v = 0; v < 4; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] != 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) os << a.str();
        else if (a.is_one()) os << mono;
        else if (a.is_integer()) os << a.str() << "*" << mono;
        else os << "(" << a.str() << ")*" << mono;
    }
    return os.str();
}

DefectClass lowest_defect_Fk(long g, int k) {
    require(k >= 1 && g >= k + 1, "lowest-defect solution needs g >= k + 1");
    const int ord = k + 1;
    MultiPoly beta = MultiPoly::var(Var::beta), alpha = MultiPoly::var(Var::alpha);
    MultiPoly eta = MultiPoly::var(Var::eta), gam = MultiPoly::var(Var::gamma4);
    std::vector<MultiPoly> c1(ord), c2(ord);
    for (int i = 0; i < ord; ++i) {
        c1[i] = beta.pow(i) * Rational(binomial_general(g - k - 2, i));
        c2[i] = beta.pow(i) * Rational(mpz_class(binomial_general(g, i) * (mpz_class(1) << i)));
    }
    auto base = TruncSeries::from_coeffs('t', c1, ord) * TruncSeries::from_coeffs('t', c2, ord);
    auto inv = series_inv(TruncSeries::polynomial('t', {MultiPoly(1), beta * Rational(2)}), ord);
    auto arg = TruncSeries::polynomial('t', {MultiPoly(), eta * alpha * Rational(2)}) -
               TruncSeries::polynomial('t', {MultiPoly(), MultiPoly(), eta * gam * Rational(2)}) * inv;
    auto full = base * series_exp(arg.with_order(ord), ord);
    Rational norm = heat::pk(k).eval(Rational(g), Rational(3 * g - k - 2));
    if (norm.is_zero()) throw std::domain_error("p_k(g, 3g-k-2) vanishes");
    return DefectClass{full[k] * (Rational(1) / norm)};
}

std::vector<Rational> top_defect_pairings(long g, int k, int h, const DefectClass& x) {
    std::vector<Rational> out;
    for (auto [a2, n2] : cols_k(k)) {
        int ai = static_cast<int>(3 * g - 3 - k - h - a2 - n2);
        if (ai < 0) continue;
        Rational s(0);
        for (const auto& [m, c] : x.poly.terms()) {
            auto cl = to_class(m);
            intersect::MonomialClass prod{cl.i + ai, cl.m + a2 - n2, cl.j + n2, cl.n + k - 1 - a2};
            s += c * intersect::monomial_Z(static_cast<int>(g), k, prod);
        }
        out.push_back(s);
    }
    return out;
}

GeneralSolution solve_general(long g, int k, int h) {
    PairingMatrix M = build_Mkh(g, k, h);
    auto ker = left_kernel(M);
    GeneralSolution s;
    s.kernel_dim = ker.size();
    std::size_t dist = M.rows.size() - 1;
    s.distinguished_nonzero = std::any_of(ker.begin(), ker.end(), [&](const Vector& v) { return !v[dist].is_zero(); });
    if (ker.size() != 1 || !s.distinguished_nonzero) return s;
    const Vector& v = ker[0];
    const int K = k + h;
    auto weight = [&](PairIndex r) {
        return Rational(-2).pow(K - r.a) / Rational(mpz_class(factorial(K - r.a - r.n) * factorial(r.n)));
    };
    Rational norm = v[dist] * weight(M.rows[dist]);
    MultiPoly poly;
    for (std::size_t r = 0; r < M.rows.size(); ++r) {
        if (v[r].is_zero()) continue;
        auto [a, n] = M.rows[r];
        poly += class_monomial(K - a - n, a - n, n, k - a, v[r] * weight(M.rows[r]) / norm);
    }
    s.solution = DefectClass{poly};
    return s;
}

bool redundancy_check(long g, int k, int h) { return 3 * g >= 3 * k + h + 1; }

PairingMatrix build_Qtilde(long g, int k, int h) {
    require(k >= 1 && h >= 0 && h <= k, "Qtilde needs 0 <= h <= k");
    const int K = k + h;
    PairingMatrix q = build_Qk(g, K);
    auto basis = heat::kernel_basis_polys(k, h);
    std::size_t t = 0;
    for (std::size_t r = 0; r < q.rows.size(); ++r) {
        if (q.rows[r].a < k) continue;
        if (t == basis.size()) throw std::logic_error("more replaced rows than kernel basis vectors");
        q.m.set_row(r, polyvec(basis[t++], K, q.rows));
    }
    if (t != basis.size()) throw std::logic_error("fewer replaced rows than kernel basis vectors");
    return q;
}

}  // namespace enumpw::pwmatrix
