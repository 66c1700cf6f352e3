#pragma once

#include "enumpw/multipoly.hpp"

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace enumpw {

class InsufficientPrecision : public std::runtime_error {
public:
    InsufficientPrecision(const std::string& what, int required, int available)
        : std::runtime_error(what + " (needs exponent " + std::to_string(required) +
                             ", known below " + std::to_string(available) + ")"),
          required_(required), available_(available) {}
    int required() const { return required_; }
    int available() const { return available_; }

private:
    int required_;
    int available_;
};

// Power series in one variable with MultiPoly coefficients, known modulo var^order.
// order == kExact marks a polynomial (all omitted coefficients are exactly zero).
class TruncSeries {
public:
    static constexpr int kExact = INT_MAX;

    TruncSeries() = default;
    TruncSeries(char var, int order, Truncation trunc = {});
    static TruncSeries polynomial(char var, std::vector<MultiPoly> coeffs, Truncation trunc = {});
    static TruncSeries from_coeffs(char var, std::vector<MultiPoly> coeffs, int order, Truncation trunc = {});
    static TruncSeries constant(char var, const MultiPoly& c, Truncation trunc = {});
    // The series variable itself (exact).
    static TruncSeries identity(char var, Truncation trunc = {});

    char var() const { return var_; }
    int order() const { return order_; }
    bool exact() const { return order_ == kExact; }
    const Truncation& truncation() const { return trunc_; }
    // Stored coefficients; every index past the end is zero.
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
    // Coefficient of var^i; throws when i is at or beyond the known order.
    const MultiPoly& operator[](int i) const;
    // Index of the first nonzero coefficient, or order() if none is known.
    int valuation() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    TruncSeries with_order(int n) const;
    TruncSeries with_truncation(const Truncation& t) const;
    // Multiply by var^d (d >= 0).
    TruncSeries shifted_up(int d) const;
    // Divide by var^d; the first d coefficients must be exactly zero.
    TruncSeries shifted_down(int d) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries operator-() const;
    TruncSeries scaled(const MultiPoly& c) const;
    TruncSeries scaled(const Rational& c) const { return scaled(MultiPoly(c)); }
    TruncSeries pow(int e) const;

    bool is_zero() const { return coeffs_.empty(); }
    // Equality of the known parts up to the smaller order.
    bool equals_up_to_order(const TruncSeries& o) const;
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.var_ == b.var_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    void trim();
    void check_compatible(const TruncSeries& o) const;

    char var_ = 'y';
    int order_ = kExact;
    Truncation trunc_;
    std::vector<MultiPoly> coeffs_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
// order < 0 keeps a's order; an explicit order is required when a is a nonconstant polynomial.
TruncSeries series_inv(const TruncSeries& a, int order = -1);
TruncSeries series_exp(const TruncSeries& a, int order = -1);
enum class Hyp { sinh, cosh, tanh };
TruncSeries series_hyp(const TruncSeries& a, Hyp kind, int order = -1);
// a(replacement): replaces a's series variable; the result is in replacement's variable.
TruncSeries substitute(const TruncSeries& a, const TruncSeries& replacement);
// Replaces the coefficient variable v (nonnegative powers only) by a series in a's variable.
TruncSeries substitute_var(const TruncSeries& a, Var v, const TruncSeries& replacement);
TruncSeries derivative(const TruncSeries& a);

// var^shift * body, with the body a power series; every exponent below shift is zero.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(TruncSeries body, int shift = 0);

    char var() const { return body_.var(); }
    int shift() const { return shift_; }
    const TruncSeries& body() const { return body_; }
    // Exponents below this are known.
    int abs_order() const;
    bool exact() const { return body_.exact(); }
    MultiPoly coefficient(int e) const;
    // Lowest exponent with a nonzero coefficient.
    int valuation() const { return shift_ + body_.valuation(); }
    LaurentSeries normalized() const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const { return LaurentSeries(-body_, shift_); }
    LaurentSeries scaled(const MultiPoly& c) const { return LaurentSeries(body_.scaled(c), shift_); }
    // Relative precision of the result is kept at the body's; order >= 0 caps it.
    LaurentSeries inverse(int rel_order = -1) const;
    LaurentSeries pow(int e) const;

    std::string str() const;

private:
    int shift_ = 0;
    TruncSeries body_;
};

LaurentSeries laurent_div(const LaurentSeries& num, const LaurentSeries& den);
LaurentSeries derivative(const LaurentSeries& a);
MultiPoly residue(const LaurentSeries& a);

}  // namespace enumpw
