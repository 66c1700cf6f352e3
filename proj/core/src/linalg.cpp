#include "enumpw/linalg.hpp"

#include <stdexcept>

namespace enumpw {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row to integers; returns the product of the scale factors.
mpz_class to_integer_rows(const Matrix& m, IntMatrix& out) {
    out.assign(m.rows(), std::vector<mpz_class>(m.cols()));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).num() * (l / m(i, j).den());
        scale *= l;
    }
    return scale;
}

struct Echelon {
    IntMatrix a;
    std::vector<std::size_t> pivots;
    int sign = 1;
};

Echelon fraction_free_echelon(IntMatrix a) {
    Echelon e;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            e.sign = -e.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    e.a = std::move(a);
    return e;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Vector Matrix::row(std::size_t i) const { return Vector(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }

void Matrix::set_row(std::size_t i, const Vector& v) {
    if (v.size() != c_) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    IntMatrix a;
    mpz_class scale = to_integer_rows(m, a);
    Echelon e = fraction_free_echelon(std::move(a));
    if (e.pivots.size() < m.rows()) return Rational(0);
    return Rational(mpz_class(e.sign * e.a.back().back()), scale);
}

std::size_t rank(const Matrix& m) {
    IntMatrix a;
    to_integer_rows(m, a);
    return fraction_free_echelon(std::move(a)).pivots.size();
}

std::vector<Vector> nullspace(const Matrix& m) {
    IntMatrix a;
    to_integer_rows(m, a);
    Echelon e = fraction_free_echelon(std::move(a));
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector x(cols);
        x[f] = Rational(1);
        for (std::size_t t = e.pivots.size(); t-- > 0;) {
            std::size_t pc = e.pivots[t];
            Rational s(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!x[j].is_zero() && e.a[t][j] != 0) s += Rational(e.a[t][j]) * x[j];
            x[pc] = -s / Rational(e.a[t][pc]);
        }
        basis.push_back(primitive(x));
    }
    return basis;
}

Vector vec_mul(const Vector& v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix shape mismatch");
    Vector out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector primitive(const Vector& v) {
    mpz_class l = 1, gcd = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& x : v) {
        ints.push_back(x.num() * (l / x.den()));
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (gcd == 0) return v;
    int s = 1;
    for (const auto& x : ints)
        if (x != 0) {
            s = sgn(x);
            break;
        }
    Vector out;
    for (const auto& x : ints) out.emplace_back(mpz_class(x / gcd * s));
    return out;
}

bool same_line(const Vector& a, const Vector& b) {
    if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
    return primitive(a) == primitive(b);
}

}  // namespace enumpw
