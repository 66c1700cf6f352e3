#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace enumpw {

// Exact rational number, always stored in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(mpz_class(std::to_string(v))) {}
    Rational(const mpz_class& v) : v_(v) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational parse(std::string_view s);

    std::string str() const;
    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    Rational pow(long e) const;

private:
    mpq_class v_;
};

mpz_class factorial(long n);
// Binomial with the vanishing convention: 0 when top < 0, r < 0 or r > top.
mpz_class binomial(long top, long r);
// Generalized binomial top(top-1)...(top-r+1)/r! for any integer top.
mpz_class binomial_general(long top, long r);

}  // namespace enumpw
