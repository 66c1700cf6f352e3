#include "enumpw/heatpoly.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace enumpw::heat {

BivarPoly::BivarPoly(const Rational& c) {
    if (!c.is_zero()) t_[{0, 0}] = c;
}

BivarPoly BivarPoly::X() { return monomial(1, 0); }
BivarPoly BivarPoly::Z() { return monomial(0, 1); }

BivarPoly BivarPoly::monomial(int i, int j, const Rational& c) {
    BivarPoly p;
    if (!c.is_zero()) p.t_[{i, j}] = c;
    return p;
}

Rational BivarPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

int BivarPoly::weighted_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, 2 * k.first + k.second);
    return d;
}

int BivarPoly::degree_X() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

int BivarPoly::degree_Z() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

Rational BivarPoly::eval(const Rational& x, const Rational& z) const {
    int dx = degree_X(), dz = degree_Z();
    if (dx < 0) return Rational(0);
    std::vector<Rational> xp(dx + 1), zp(dz + 1);
    xp[0] = zp[0] = Rational(1);
    for (int i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x;
    for (int j = 1; j <= dz; ++j) zp[j] = zp[j - 1] * z;
    Rational s(0);
    for (const auto& [k, c] : t_) s += c * xp[k.first] * zp[k.second];
    return s;
}

BivarPoly BivarPoly::shift(const Rational& dx, const Rational& dz) const {
    BivarPoly out;
    for (const auto& [k, c] : t_) {
        auto [i, j] = k;
        for (int a = 0; a <= i; ++a) {
            Rational ca = c * Rational(binomial(i, a)) * dx.pow(i - a);
            if (ca.is_zero()) continue;
            for (int b = 0; b <= j; ++b) out.add_term({a, b}, ca * Rational(binomial(j, b)) * dz.pow(j - b));
        }
    }
    return out;
}

void BivarPoly::add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, v] : t_) v *= c;
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

BivarPoly BivarPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    BivarPoly r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string BivarPoly::str() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Key, Rational>> terms(t_.begin(), t_.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = 2 * a.first.first + a.first.second, db = 2 * b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        Rational a = c.sign() < 0 ? -c : c;
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        first = false;
        std::string mono;
        auto part = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        part("X", k.first);
        part("Z", k.second);
        if (mono.empty()) os << a.str();
        else if (a.is_one()) os << mono;
        else os << a.str() << "*" << mono;
    }
    return os.str();
}

BivarPoly binom_poly(const BivarPoly& w, int j) {
    if (j < 0) return BivarPoly();
    BivarPoly r(1);
    for (int l = 0; l < j; ++l) r = r * (w - BivarPoly(l));
    return r * (Rational(1) / Rational(factorial(j)));
}

namespace {

std::mutex pk_mutex;
std::vector<BivarPoly> pk_cache;

BivarPoly pk_build(int k) {
    BivarPoly X = BivarPoly::X(), Z = BivarPoly::Z();
    BivarPoly s;
    for (int i = 0; i <= k; ++i)
        s += binom_poly(X, i) * binom_poly(Z - X * Rational(2), k - i) * Rational(mpz_class(mpz_class(1) << i));
    return s;
}

}  // namespace

BivarPoly pk(int k) {
    if (k < 0) return BivarPoly();
    std::lock_guard lock(pk_mutex);
    while (static_cast<int>(pk_cache.size()) <= k) pk_cache.push_back(pk_build(static_cast<int>(pk_cache.size())));
    return pk_cache[k];
}

Rational pk_series_oracle(int k, long x, long z) {
    if (k < 0) return Rational(0);
    std::vector<mpz_class> a(k + 1), b(k + 1);
    for (int i = 0; i <= k; ++i) {
        a[i] = binomial_general(z - 2 * x, i);
        b[i] = binomial_general(x, i) * (mpz_class(1) << i);
    }
    mpz_class s = 0;
    for (int i = 0; i <= k; ++i) s += a[k - i] * b[i];
    return Rational(s);
}

BivarPoly pk_alt(int k) {
    if (k < 0) return BivarPoly();
    BivarPoly X = BivarPoly::X(), Z = BivarPoly::Z();
    BivarPoly s;
    for (int i = 0; i <= k; ++i)
        s += binom_poly(X, i) * binom_poly(X - Z + BivarPoly(k - 1), k - i) * Rational((k - i) % 2 ? -1 : 1);
    return s;
}

BivarPoly diff(const BivarPoly& p, DiffOp op, int times) {
    BivarPoly r = p;
    for (int t = 0; t < times; ++t) {
        switch (op) {
            case DiffOp::DZ: r = r.shift(0, 1) - r; break;
            case DiffOp::DZm1: r = r.shift(0, -1) - r; break;
            case DiffOp::DX: r = r.shift(1, 0) - r; break;
            case DiffOp::DXm1: r = r.shift(-1, 0) - r; break;
        }
    }
    return r;
}

std::vector<std::pair<long, long>> gamma_grid(int k) {
    std::vector<std::pair<long, long>> pts;
    for (long x = 0; 2 * x <= x + k - 1; ++x)
        for (long z = 2 * x; z <= x + k - 1; ++z) pts.emplace_back(x, z);
    return pts;
}

bool gamma_vanish(int k) {
    BivarPoly p = pk(k);
    for (auto [x, z] : gamma_grid(k))
        if (!p.eval(x, z).is_zero()) return false;
    return true;
}

bool pk_alt_forms(int k) { return pk_alt(k) == pk(k); }

bool pk_identities(int k) {
    BivarPoly X = BivarPoly::X(), Z = BivarPoly::Z();
    BivarPoly p = pk(k), q = pk(k - 1);
    bool first = pk(k + 1) * Rational(k + 1) == X * p.shift(-1, -2) + (Z - X - BivarPoly(k)) * p;
    bool second = p.shift(-1, 0) == q.shift(-2, -2) + p.shift(-2, -1);
    bool third = p == p.shift(0, -1) + q.shift(0, -1);
    return first && second && third;
}

bool heat_equation(int k) {
    BivarPoly p = pk(k);
    return diff(p, DiffOp::DZm1, 2) == -diff(p, DiffOp::DX);
}

std::size_t gamma_vanishing_dimension(int k) {
    std::vector<std::pair<int, int>> monos;
    for (int i = 0; 2 * i <= k; ++i)
        for (int j = 0; 2 * i + j <= k; ++j) monos.emplace_back(i, j);
    auto pts = gamma_grid(k);
    Matrix m(pts.size(), monos.size());
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c)
            m(r, c) = Rational(mpz_class(pts[r].first)).pow(monos[c].first) *
                      Rational(mpz_class(pts[r].second)).pow(monos[c].second);
    return nullspace(m).size();
}

BivarPoly newton_reconstruct(const BivarPoly& p, int k, long g) {
    BivarPoly X = BivarPoly::X(), Z = BivarPoly::Z();
    Rational x0(g), z0(3 * g - k - 2);
    BivarPoly out;
    BivarPoly dn = p;
    for (int n = 0; 2 * n <= k; ++n) {
        BivarPoly dl = dn;
        for (int l = 0; l + 2 * n <= k; ++l) {
            Rational v = dl.eval(x0, z0) * Rational(l % 2 ? -1 : 1);
            if (!v.is_zero())
                out += binom_poly(BivarPoly(Rational(3 * g - 3 + l - k)) - Z, l) * binom_poly(BivarPoly(Rational(g)) - X, n) * v;
            dl = diff(dl, DiffOp::DZ);
        }
        dn = diff(dn, DiffOp::DXm1);
    }
    return out;
}

std::vector<std::pair<int, int>> kernel_basis_labels(int h) {
    std::vector<std::pair<int, int>> l;
    for (int i = 0; i <= h; ++i)
        for (int j = 0; j <= i; ++j) l.emplace_back(i, j);
    return l;
}

std::vector<BivarPoly> kernel_basis_polys(int k, int h) {
    if (h < 0 || h > k) throw std::invalid_argument("kernel basis needs 0 <= h <= k");
    std::vector<BivarPoly> out;
    for (auto [i, j] : kernel_basis_labels(h)) out.push_back(BivarPoly::Z().pow(j) * pk(k + h - i));
    return out;
}

Matrix kernel_basis_certificate(int k, int h) {
    auto labels = kernel_basis_labels(h);
    std::vector<std::pair<int, int>> pts;
    for (int b = 0; b <= h; ++b)
        for (int a = 0; a <= b; ++a) pts.emplace_back(a, b);
    Matrix m(labels.size(), pts.size());
    for (std::size_t r = 0; r < labels.size(); ++r) {
        auto [i, j] = labels[r];
        BivarPoly f = binom_poly(BivarPoly::Z() - BivarPoly(h + k - j), j) * pk(k + h - i);
        for (std::size_t c = 0; c < pts.size(); ++c) {
            auto [a, b] = pts[c];
            m(r, c) = f.eval(h - b, h + k - b + a);
        }
    }
    return m;
}

namespace {

BivarPoly W_entry(int k, int h, int i, int j) { return pk(k - 2 * i + j).shift(-h, -2 * i); }

BivarPoly det_laplace(const std::vector<std::vector<BivarPoly>>& m) {
    std::size_t n = m.size();
    std::unordered_map<std::uint32_t, BivarPoly> memo;
    // Minor on rows [row, n) and the columns in mask.
    std::function<BivarPoly(std::size_t, std::uint32_t)> minor = [&](std::size_t row, std::uint32_t mask) -> BivarPoly {
        if (row == n) return BivarPoly(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        BivarPoly s;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m[row][c].is_zero()) {
                BivarPoly t = m[row][c] * minor(row + 1, mask & ~(1u << c));
                s += sign > 0 ? t : -t;
            }
            sign = -sign;
        }
        memo.emplace(mask, s);
        return s;
    };
    return minor(0, (1u << n) - 1);
}

// Coefficients (ascending) of the polynomial through (i, ys[i]), i = 0..n-1.
std::vector<Rational> interpolate(const std::vector<Rational>& ys) {
    std::size_t n = ys.size();
    std::vector<Rational> dd = ys;
    for (std::size_t l = 1; l < n; ++l)
        for (std::size_t i = n - 1; i >= l; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(l));
    std::vector<Rational> coef(n), basis{Rational(1)};
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t d = 0; d < basis.size(); ++d) coef[d] += dd[l] * basis[d];
        std::vector<Rational> next(basis.size() + 1);
        for (std::size_t d = 0; d < basis.size(); ++d) {
            next[d + 1] += basis[d];
            next[d] -= basis[d] * Rational(static_cast<long>(l));
        }
        basis = std::move(next);
    }
    return coef;
}

}  // namespace

BivarPoly W_det(int k, int h) {
    if (h < 0) throw std::invalid_argument("W determinant needs h >= 0");
    if (h <= 4) {
        std::vector<std::vector<BivarPoly>> m(h + 1, std::vector<BivarPoly>(h + 1));
        for (int i = 0; i <= h; ++i)
            for (int j = 0; j <= h; ++j) m[i][j] = W_entry(k, h, i, j);
        return det_laplace(m);
    }
    int d = std::max((h + 1) * k - h * (h + 1) / 2, 0);
    int dx = d / 2, dz = d;
    std::vector<std::vector<Rational>> zcoef(dx + 1);
    for (int x = 0; x <= dx; ++x) {
        std::vector<Rational> ys(dz + 1);
        for (int z = 0; z <= dz; ++z) ys[z] = W_eval(k, h, x, z);
        zcoef[x] = interpolate(ys);
    }
    BivarPoly out;
    for (int j = 0; j <= dz; ++j) {
        std::vector<Rational> ys(dx + 1);
        for (int x = 0; x <= dx; ++x) ys[x] = zcoef[x][j];
        auto xc = interpolate(ys);
        for (int i = 0; i <= dx; ++i) out += BivarPoly::monomial(i, j, xc[i]);
    }
    return out;
}

Rational W_eval(int k, int h, const Rational& x, const Rational& z) {
    Matrix m(h + 1, h + 1);
    std::vector<BivarPoly> ps;
    for (int l = 0; l <= k + h; ++l) ps.push_back(pk(l));
    for (int i = 0; i <= h; ++i)
        for (int j = 0; j <= h; ++j) {
            int idx = k - 2 * i + j;
            m(i, j) = idx < 0 ? Rational(0) : ps[idx].eval(x - Rational(h), z - Rational(2 * i));
        }
    return determinant(m);
}

BivarPoly W0(int k) { return pk(k).shift(-1, 0) * pk(k - 1).shift(-1, -2); }
BivarPoly W1(int k) { return pk(k + 1).shift(-1, 0) * pk(k - 2).shift(-1, -2); }

bool h1_recurrence(int k) {
    BivarPoly lhs = W0(k) * Rational(k - 1) - W1(k) * Rational(k + 1);
    BivarPoly rhs = (BivarPoly::X() - BivarPoly(1)) * W_det(k - 1, 1).shift(-1, -2) * Rational(2);
    return lhs == rhs;
}

Rational B_det(int k, int h, const Rational& x, const Rational& z) {
    auto rows = kernel_basis_labels(h);
    std::vector<std::pair<int, int>> cols;
    for (int m = 0; m <= h; ++m)
        for (int n = 0; n <= m; ++n) cols.emplace_back(n, m);
    Matrix b(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [i, j] = rows[r];
        BivarPoly p = pk(k + h - i);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto [n, m] = cols[c];
            Rational zm = z - Rational(m);
            b(r, c) = zm.pow(j) * p.eval(x - Rational(n), zm);
        }
    }
    return determinant(b);
}

std::vector<ScanRow> positivity_scan(const ScanSpec& spec) {
    std::vector<ScanRow> rows;
    for (int k = spec.k_min; k <= spec.k_max; ++k)
        for (int h = spec.h_min; h <= std::min(spec.h_max, k); ++h) {
            long hi = spec.g_max > 0 ? spec.g_max : k + spec.g_span;
            for (long g = k + 1; g <= hi; ++g) rows.push_back({k, h, g, Rational(0)});
        }
    if (rows.empty()) return rows;
    pk(spec.k_max + spec.h_max);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < rows.size();) {
            auto& r = rows[i];
            r.value = W_eval(r.k, r.h, Rational(r.g), Rational(3 * r.g - r.k - r.h - 2));
        }
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

}  // namespace enumpw::heat
