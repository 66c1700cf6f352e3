#pragma once

#include "enumpw/linalg.hpp"
#include "enumpw/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace enumpw::heat {

// Polynomial in X and Z; weighted degree uses deg X = 2, deg Z = 1.
class BivarPoly {
public:
    using Key = std::pair<int, int>;  // (X exponent, Z exponent)

    BivarPoly() = default;
    BivarPoly(const Rational& c);
    BivarPoly(int c) : BivarPoly(Rational(c)) {}
    static BivarPoly X();
    static BivarPoly Z();
    static BivarPoly monomial(int i, int j, const Rational& c = Rational(1));

    const std::map<Key, Rational>& terms() const { return t_; }
    Rational coeff(int i, int j) const;
    bool is_zero() const { return t_.empty(); }
    // -1 for the zero polynomial.
    int weighted_degree() const;
    int degree_X() const;
    int degree_Z() const;

    Rational eval(const Rational& x, const Rational& z) const;
    // p(X + dx, Z + dz)
    BivarPoly shift(const Rational& dx, const Rational& dz) const;

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(const Rational& c);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly operator-() const { return *this * Rational(-1); }
    BivarPoly pow(int e) const;
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.t_ == b.t_; }

    // Descending weighted degree, e.g. "2*X*Z - X^2 + Z".
    std::string str() const;

private:
    void add_term(const Key& k, const Rational& c);
    std::map<Key, Rational> t_;
};

// w (w-1) ... (w-j+1) / j!
BivarPoly binom_poly(const BivarPoly& w, int j);

// [t^k] (1+t)^(Z-2X) (1+2t)^X, cached; p_k = 0 for k < 0.
BivarPoly pk(int k);
// Same coefficient at an integer point, extracted from truncated series in t.
Rational pk_series_oracle(int k, long x, long z);
// [t^k] (1+t)^X (1-t)^(X-Z+k-1)
BivarPoly pk_alt(int k);

enum class DiffOp { DZ, DX, DZm1, DXm1 };
// DZ f = f(Z+1) - f, DZm1 f = f(Z-1) - f, likewise in X.
BivarPoly diff(const BivarPoly& p, DiffOp op, int times = 1);

// Integer points X >= 0, 2X <= Z <= X + k - 1.
std::vector<std::pair<long, long>> gamma_grid(int k);
bool gamma_vanish(int k);
bool pk_alt_forms(int k);
bool pk_identities(int k);
// D_{Z,-1}^2 p_k = -D_X p_k
bool heat_equation(int k);
// Dimension of the space of weighted-degree <= k polynomials vanishing on the grid.
std::size_t gamma_vanishing_dimension(int k);
// Backward Newton expansion around (g, 3g-k-2).
BivarPoly newton_reconstruct(const BivarPoly& p, int k, long g);

// Z^j p_{k+h-i}, 0 <= j <= i <= h, (i, j) lexicographic.
std::vector<BivarPoly> kernel_basis_polys(int k, int h);
std::vector<std::pair<int, int>> kernel_basis_labels(int h);
// Evaluation matrix binom(Z-h-k+j, j) p_{k+h-i} at (h-b, h+k-b+a), 0 <= a <= b <= h.
Matrix kernel_basis_certificate(int k, int h);

// det(p_{k-2i+j}(X-h, Z-2i))_{0<=i,j<=h}
BivarPoly W_det(int k, int h);
Rational W_eval(int k, int h, const Rational& x, const Rational& z);
BivarPoly W0(int k);
BivarPoly W1(int k);
bool h1_recurrence(int k);

// det((Z-m)^j p_{k+h-i}(X-n, Z-m)), rows (i,j) 0<=j<=i<=h, columns (n,m) 0<=n<=m<=h.
Rational B_det(int k, int h, const Rational& x, const Rational& z);

struct ScanRow {
    int k;
    int h;
    long g;
    Rational value;  // W_{k,h}(g, 3g-k-h-2)
    int sign() const { return value.sign(); }
};

struct ScanSpec {
    int k_min = 1;
    int k_max = 1;
    int h_min = 0;
    int h_max = 1;
    // g runs over [k + 1, g_max] when g_max > 0, else [k + 1, k + g_span].
    long g_max = 0;
    long g_span = 12;
    unsigned jobs = 1;
};

// Rows sorted by (k, h, g); pairs with h > k are skipped.
std::vector<ScanRow> positivity_scan(const ScanSpec& spec);

struct DetRelationRow {
    long g;
    Rational det_qtilde;
    Rational det_b;
    Rational prod_w;
    std::optional<Rational> ratio_b;  // det_qtilde / det_b when det_b != 0
    std::optional<Rational> ratio_w;
};

struct DetRelationReport {
    int k;
    int h;
    std::vector<DetRelationRow> rows;
    bool ratio_b_constant = false;
    bool ratio_w_constant = false;
};

DetRelationReport det_tildeQ_relation(int k, int h, const std::vector<long>& g_samples);

}  // namespace enumpw::heat
