#pragma once

#include "enumpw/rational.hpp"

#include <cstddef>
#include <vector>

namespace enumpw {

using Vector = std::vector<Rational>;

// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& d);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    Vector row(std::size_t i) const;
    void set_row(std::size_t i, const Vector& v);
    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }

private:
    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<Rational> d_;
};

// Fraction-free (Bareiss) elimination on the row-scaled integer matrix.
Rational determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column in increasing order,
// each scaled to a primitive integer vector with positive first nonzero entry.
std::vector<Vector> nullspace(const Matrix& m);

Vector vec_mul(const Vector& v, const Matrix& m);
bool is_zero(const Vector& v);
Vector primitive(const Vector& v);
// True when a and b are nonzero multiples of each other.
bool same_line(const Vector& a, const Vector& b);

}  // namespace enumpw
