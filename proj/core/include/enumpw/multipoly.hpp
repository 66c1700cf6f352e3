#pragma once

#include "enumpw/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enumpw {

// Formal variables in their fixed global order. The gamma4 slot carries 4*gamma.
// The G slot is reused for G-tilde where a routine says so.
enum class Var : std::uint8_t { alpha = 0, beta, gamma4, eta, A, G, B, u };
inline constexpr int kNumVars = 8;

const char* var_name(Var v);
Var var_from_name(const std::string& name);

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Laurent monomial, exponents in [-127, 127], packed so that integer order is
// lexicographic order in the global variable order.
class Monomial {
public:
    Monomial() : key_(kZeroKey) {}
    Monomial(std::initializer_list<std::pair<Var, int>> exps);
    static Monomial from_key(std::uint64_t k) { Monomial m; m.key_ = k; return m; }

    int exp(Var v) const {
        int shift = 8 * (kNumVars - 1 - static_cast<int>(v));
        return static_cast<int>((key_ >> shift) & 0xff) - 128;
    }
    Monomial with(Var v, int e) const;
    std::array<int, kNumVars> exponents() const;
    bool is_one() const { return key_ == kZeroKey; }
    std::uint64_t key() const { return key_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    Monomial inverse() const;
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.key_ == b.key_; }
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.key_ <=> b.key_; }

    std::string str() const;

    static constexpr std::uint64_t kZeroKey = 0x8080808080808080ull;

private:
    std::uint64_t key_;
};

// Quotient by the ideal of monomials exceeding any weighted bound.
struct WeightBound {
    std::array<int, kNumVars> weights{};
    int bound = 0;
    friend bool operator==(const WeightBound&, const WeightBound&) = default;
};

class Truncation {
public:
    Truncation() = default;
    Truncation& add(std::initializer_list<std::pair<Var, int>> weights, int bound);

    bool empty() const { return bounds_.empty(); }
    bool admits(const Monomial& m) const;
    // Zero weight under every bound.
    bool is_weightless(const Monomial& m) const;
    // Positive weight under some bound and nonnegative under all.
    bool is_nilpotent(const Monomial& m) const;
    int nilpotency_bound() const;
    const std::vector<WeightBound>& bounds() const { return bounds_; }

    friend bool operator==(const Truncation&, const Truncation&) = default;

private:
    std::vector<WeightBound> bounds_;
};

// Resolve the truncation of a combined operation: an empty side adopts the other.
const Truncation& merge_truncation(const Truncation& a, const Truncation& b);

class MultiPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Monomial& m, const Rational& c);
    static MultiPoly var(Var v, int e = 1) { return MultiPoly(Monomial{{v, e}}, Rational(1)); }
    // Terms may be unsorted and repeated; they are merged.
    static MultiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;

    // Terms whose exponent in v equals e, with v removed.
    MultiPoly coefficient(Var v, int e) const;
    int max_exp(Var v) const;
    int min_exp(Var v) const;

    MultiPoly truncated(const Truncation& t) const;
    MultiPoly mul_monomial(const Monomial& m) const;
    MultiPoly substitute(Var v, const Rational& value) const;
    MultiPoly pow(int e, const Truncation& t = {}) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul(a, b, Truncation{}); }
    MultiPoly operator-() const;
    static MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const Truncation& t);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // e.g. "beta + (2/9)*alpha*eta"; terms ascending in the canonical order.
    std::string str() const;

private:
    std::vector<Term> terms_;
};

// Inverse of m*(1+x) with m a weightless monomial and x nilpotent modulo t.
MultiPoly invert(const MultiPoly& c, const Truncation& t);
// exp(c) for c nilpotent modulo t.
MultiPoly exp_nilpotent(const MultiPoly& c, const Truncation& t);

}  // namespace enumpw
