#include "enumpw/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace enumpw {

namespace {

constexpr const char* kNames[kNumVars] = {"alpha", "beta", "gamma4", "eta", "A", "G", "B", "u"};

int shift_of(int i) { return 8 * (kNumVars - 1 - i); }

std::uint64_t pack(const std::array<int, kNumVars>& e) {
    std::uint64_t k = 0;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] < -127 || e[i] > 127) throw std::overflow_error("monomial exponent out of range");
        k |= static_cast<std::uint64_t>(e[i] + 128) << shift_of(i);
    }
    return k;
}

int weight(const Monomial& m, const WeightBound& b) {
    int w = 0;
    for (int i = 0; i < kNumVars; ++i)
        if (b.weights[i] != 0) w += b.weights[i] * m.exp(static_cast<Var>(i));
    return w;
}

}  // namespace

const char* var_name(Var v) { return kNames[static_cast<int>(v)]; }

Var var_from_name(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kNames[i]) return static_cast<Var>(i);
    throw std::invalid_argument("unknown variable '" + name + "'");
}

Monomial::Monomial(std::initializer_list<std::pair<Var, int>> exps) : key_(kZeroKey) {
    auto e = exponents();
    for (auto [v, x] : exps) e[static_cast<int>(v)] += x;
    key_ = pack(e);
}

std::array<int, kNumVars> Monomial::exponents() const {
    std::array<int, kNumVars> e{};
    for (int i = 0; i < kNumVars; ++i) e[i] = exp(static_cast<Var>(i));
    return e;
}

Monomial Monomial::with(Var v, int x) const {
    auto e = exponents();
    e[static_cast<int>(v)] = x;
    return from_key(pack(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::array<int, kNumVars> e{};
    for (int i = 0; i < kNumVars; ++i) e[i] = a.exp(static_cast<Var>(i)) + b.exp(static_cast<Var>(i));
    return Monomial::from_key(pack(e));
}

Monomial Monomial::inverse() const {
    auto e = exponents();
    for (auto& x : e) x = -x;
    return from_key(pack(e));
}

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        int x = exp(static_cast<Var>(i));
        if (x == 0) continue;
        if (!out.empty()) out += "*";
        out += kNames[i];
        if (x != 1) out += "^" + (x < 0 ? "(" + std::to_string(x) + ")" : std::to_string(x));
    }
    return out.empty() ? "1" : out;
}

Truncation& Truncation::add(std::initializer_list<std::pair<Var, int>> weights, int bound) {
    WeightBound b;
    for (auto [v, w] : weights) b.weights[static_cast<int>(v)] = w;
    b.bound = bound;
    bounds_.push_back(b);
    return *this;
}

bool Truncation::admits(const Monomial& m) const {
    for (const auto& b : bounds_)
        if (weight(m, b) > b.bound) return false;
    return true;
}

bool Truncation::is_weightless(const Monomial& m) const {
    for (const auto& b : bounds_)
        if (weight(m, b) != 0) return false;
    return true;
}

bool Truncation::is_nilpotent(const Monomial& m) const {
    bool positive = false;
    for (const auto& b : bounds_) {
        int w = weight(m, b);
        if (w < 0) return false;
        if (w > 0) positive = true;
    }
    return positive;
}

int Truncation::nilpotency_bound() const {
    int s = 0;
    for (const auto& b : bounds_) s += std::max(b.bound, 0) + 1;
    return s;
}

const Truncation& merge_truncation(const Truncation& a, const Truncation& b) {
    if (a.empty()) return b;
    if (b.empty() || a == b) return a;
    throw RingMismatch("operands carry different truncations");
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(m, c);
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    MultiPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else {
            if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
    return p;
}

Rational MultiPoly::constant_term() const { return coeff(Monomial()); }

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
}

MultiPoly MultiPoly::coefficient(Var v, int e) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_)
        if (m.exp(v) == e) out.terms_.emplace_back(m.with(v, 0), c);
    if (e != 0) std::sort(out.terms_.begin(), out.terms_.end(),
                          [](const Term& a, const Term& b) { return a.first < b.first; });
    return out;
}

int MultiPoly::max_exp(Var v) const {
    int r = std::numeric_limits<int>::min();
    for (const auto& t : terms_) r = std::max(r, t.first.exp(v));
    return r;
}

int MultiPoly::min_exp(Var v) const {
    int r = std::numeric_limits<int>::max();
    for (const auto& t : terms_) r = std::min(r, t.first.exp(v));
    return r;
}

MultiPoly MultiPoly::truncated(const Truncation& t) const {
    if (t.empty()) return *this;
    MultiPoly out;
    for (const auto& term : terms_)
        if (t.admits(term.first)) out.terms_.push_back(term);
    return out;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m) const {
    MultiPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [x, c] : terms_) out.terms_.emplace_back(x * m, c);
    return out;
}

MultiPoly MultiPoly::substitute(Var v, const Rational& value) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        int e = m.exp(v);
        if (e != 0 && value.is_zero()) {
            if (e < 0) throw std::domain_error("substituting zero into a negative power");
            continue;
        }
        out.emplace_back(m.with(v, 0), c * value.pow(e));
    }
    return from_terms(std::move(out));
}

MultiPoly MultiPoly::pow(int e, const Truncation& t) const {
    if (e < 0) return invert(*this, t).pow(-e, t);
    MultiPoly result(1), base = *this;
    while (e > 0) {
        if (e & 1) result = mul(result, base, t);
        e >>= 1;
        if (e) base = mul(base, base, t);
    }
    return result.truncated(t);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) { terms_ = o.terms_; return *this; }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
            ++i, ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

MultiPoly MultiPoly::mul(const MultiPoly& a, const MultiPoly& b, const Truncation& t) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return (b * a.terms_[0].second).truncated(t);
    if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return (a * b.terms_[0].second).truncated(t);
    struct Prod {
        std::uint64_t key;
        std::uint32_t i, j;
    };
    std::vector<Prod> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (std::uint32_t i = 0; i < a.terms_.size(); ++i)
        for (std::uint32_t j = 0; j < b.terms_.size(); ++j) {
            Monomial m = a.terms_[i].first * b.terms_[j].first;
            if (!t.empty() && !t.admits(m)) continue;
            prods.push_back({m.key(), i, j});
        }
    std::sort(prods.begin(), prods.end(), [](const Prod& x, const Prod& y) { return x.key < y.key; });
    MultiPoly out;
    mpq_class acc, tmp;
    for (std::size_t s = 0; s < prods.size();) {
        std::size_t e = s;
        mpq_mul(acc.get_mpq_t(), a.terms_[prods[s].i].second.raw().get_mpq_t(),
                b.terms_[prods[s].j].second.raw().get_mpq_t());
        for (++e; e < prods.size() && prods[e].key == prods[s].key; ++e) {
            mpq_mul(tmp.get_mpq_t(), a.terms_[prods[e].i].second.raw().get_mpq_t(),
                    b.terms_[prods[e].j].second.raw().get_mpq_t());
            mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
        }
        if (sgn(acc) != 0) out.terms_.emplace_back(Monomial::from_key(prods[s].key), Rational(acc));
        s = e;
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << a.str();
            continue;
        }
        if (!a.is_one()) {
            if (a.is_integer()) os << a.str() << "*";
            else os << "(" << a.str() << ")*";
        }
        os << m.str();
    }
    return os.str();
}

MultiPoly invert(const MultiPoly& c, const Truncation& t) {
    if (c.is_zero()) throw NotInvertible("zero is not invertible");
    const MultiPoly::Term* lead = nullptr;
    for (const auto& term : c.terms()) {
        if (t.is_weightless(term.first)) {
            if (lead) throw NotInvertible("not a unit: " + c.str());
            lead = &term;
        } else if (!t.is_nilpotent(term.first)) {
            throw NotInvertible("not a unit: " + c.str());
        }
    }
    if (!lead) throw NotInvertible("not a unit: " + c.str());
    Monomial minv = lead->first.inverse();
    Rational cinv = Rational(1) / lead->second;
    MultiPoly x = c.mul_monomial(minv) * cinv - MultiPoly(1);
    MultiPoly neg_x = -x;
    MultiPoly sum(1), power(1);
    for (int n = 1; n <= t.nilpotency_bound() && !x.is_zero(); ++n) {
        power = MultiPoly::mul(power, neg_x, t);
        if (power.is_zero()) break;
        sum += power;
    }
    return (sum.mul_monomial(minv) * cinv).truncated(t);
}

MultiPoly exp_nilpotent(const MultiPoly& c, const Truncation& t) {
    for (const auto& term : c.terms())
        if (!t.is_nilpotent(term.first))
            throw std::invalid_argument("exp of a non-nilpotent element: " + c.str());
    MultiPoly sum(1), power(1);
    for (int n = 1; n <= t.nilpotency_bound(); ++n) {
        power = MultiPoly::mul(power, c, t) * Rational(mpz_class(1), mpz_class(n));
        if (power.is_zero()) break;
        sum += power;
    }
    return sum;
}

}  // namespace enumpw
