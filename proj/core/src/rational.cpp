#include "enumpw/rational.hpp"

#include <stdexcept>

namespace enumpw {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(s) + "'"); };
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (t.empty()) return false;
        size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    if (!valid_int(ns, true)) throw bad();
    std::string nstr(ns[0] == '+' ? ns.substr(1) : ns);
    mpz_class num(nstr, 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        std::string_view ds = s.substr(slash + 1);
        if (!valid_int(ds, false)) throw bad();
        den = mpz_class(std::string(ds), 10);
        if (den == 0) throw bad();
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(long e) const {
    if (e < 0) return Rational(1) / pow(-e);
    Rational r;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

mpz_class factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(long top, long r) {
    if (top < 0 || r < 0 || r > top) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(r));
    return out;
}

mpz_class binomial_general(long top, long r) {
    if (r < 0) return 0;
    mpz_class out;
    mpz_class t(static_cast<long>(top));
    mpz_bin_ui(out.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

}  // namespace enumpw
