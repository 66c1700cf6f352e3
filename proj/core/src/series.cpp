#include "enumpw/series.hpp"

#include <algorithm>
#include <sstream>

namespace enumpw {

namespace {

int sat_add(int a, int b) {
    if (a == TruncSeries::kExact || b == TruncSeries::kExact) return TruncSeries::kExact;
    long long s = static_cast<long long>(a) + b;
    return s >= TruncSeries::kExact ? TruncSeries::kExact - 1 : static_cast<int>(s);
}

int sat_mul(int a, int b) {
    if (a == TruncSeries::kExact || b == TruncSeries::kExact) return TruncSeries::kExact;
    long long s = static_cast<long long>(a) * b;
    return s >= TruncSeries::kExact ? TruncSeries::kExact - 1 : static_cast<int>(s);
}

const MultiPoly& zero_poly() {
    static const MultiPoly z;
    return z;
}

// Working order for an operation producing an infinite series from a.
int resolve_order(const TruncSeries& a, int order, const char* what) {
    if (order >= 0) return std::min(order, a.order());
    if (!a.exact()) return a.order();
    if (a.degree() <= 0) return TruncSeries::kExact;
    throw std::invalid_argument(std::string(what) + " of a polynomial needs an explicit order");
}

}  // namespace

TruncSeries::TruncSeries(char var, int order, Truncation trunc)
    : var_(var), order_(order), trunc_(std::move(trunc)) {
    if (order < 0) throw std::invalid_argument("negative series order");
}

TruncSeries TruncSeries::polynomial(char var, std::vector<MultiPoly> coeffs, Truncation trunc) {
    return from_coeffs(var, std::move(coeffs), kExact, std::move(trunc));
}

TruncSeries TruncSeries::from_coeffs(char var, std::vector<MultiPoly> coeffs, int order, Truncation trunc) {
    TruncSeries s(var, order, std::move(trunc));
    if (static_cast<long long>(coeffs.size()) > order) coeffs.resize(order);
    s.coeffs_ = std::move(coeffs);
    if (!s.trunc_.empty())
        for (auto& c : s.coeffs_) c = c.truncated(s.trunc_);
    s.trim();
    return s;
}

TruncSeries TruncSeries::constant(char var, const MultiPoly& c, Truncation trunc) {
    return polynomial(var, {c}, std::move(trunc));
}

TruncSeries TruncSeries::identity(char var, Truncation trunc) {
    return polynomial(var, {MultiPoly(), MultiPoly(1)}, std::move(trunc));
}

void TruncSeries::trim() {
    if (!exact() && static_cast<long long>(coeffs_.size()) > order_) coeffs_.resize(order_);
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (var_ != o.var_)
        throw RingMismatch(std::string("series in different variables: ") + var_ + " vs " + o.var_);
    merge_truncation(trunc_, o.trunc_);
}

const MultiPoly& TruncSeries::operator[](int i) const {
    if (i < 0) throw std::invalid_argument("negative series index");
    if (i >= order_) throw InsufficientPrecision(std::string("series in ") + var_, i, order_);
    if (i >= static_cast<int>(coeffs_.size())) return zero_poly();
    return coeffs_[i];
}

int TruncSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return order_;
}

TruncSeries TruncSeries::with_order(int n) const {
    TruncSeries s = *this;
    s.order_ = std::min(n, order_);
    s.trim();
    return s;
}

TruncSeries TruncSeries::with_truncation(const Truncation& t) const {
    return from_coeffs(var_, coeffs_, order_, t);
}

TruncSeries TruncSeries::shifted_up(int d) const {
    if (d < 0) throw std::invalid_argument("negative shift");
    if (d == 0) return *this;
    TruncSeries s(var_, sat_add(order_, d), trunc_);
    if (!coeffs_.empty()) {
        s.coeffs_.assign(d, MultiPoly());
        s.coeffs_.insert(s.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    }
    return s;
}

TruncSeries TruncSeries::shifted_down(int d) const {
    if (d < 0) throw std::invalid_argument("negative shift");
    if (d == 0) return *this;
    if (d > order_) throw InsufficientPrecision("shifting down", d, order_);
    for (int i = 0; i < d && i < static_cast<int>(coeffs_.size()); ++i)
        if (!coeffs_[i].is_zero()) throw std::invalid_argument("shifting down past a nonzero coefficient");
    TruncSeries s(var_, exact() ? kExact : order_ - d, trunc_);
    if (static_cast<int>(coeffs_.size()) > d) s.coeffs_.assign(coeffs_.begin() + d, coeffs_.end());
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_compatible(o);
    trunc_ = merge_truncation(trunc_, o.trunc_);
    order_ = std::min(order_, o.order_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    if (!trunc_.empty())
        for (auto& c : coeffs_) c = c.truncated(trunc_);
    trim();
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries TruncSeries::operator-() const {
    TruncSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

TruncSeries TruncSeries::scaled(const MultiPoly& c) const {
    TruncSeries s = *this;
    for (auto& x : s.coeffs_) x = MultiPoly::mul(x, c, trunc_);
    s.trim();
    return s;
}

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) return series_inv(*this).pow(-e);
    TruncSeries result = constant(var_, MultiPoly(1), trunc_), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool TruncSeries::equals_up_to_order(const TruncSeries& o) const {
    if (var_ != o.var_) return false;
    int n = std::min(order_, o.order_);
    std::size_t len = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t i = 0; i < len && static_cast<long long>(i) < n; ++i) {
        const MultiPoly& x = i < coeffs_.size() ? coeffs_[i] : zero_poly();
        const MultiPoly& y = i < o.coeffs_.size() ? o.coeffs_[i] : zero_poly();
        if (!(x == y)) return false;
    }
    return true;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].str() << ")";
        if (i > 0) os << "*" << var_ << "^" << i;
    }
    if (first) os << "0";
    if (!exact()) os << " + O(" << var_ << "^" << order_ << ")";
    return os.str();
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    if (a.var() != b.var())
        throw RingMismatch(std::string("series in different variables: ") + a.var() + " vs " + b.var());
    const Truncation& t = merge_truncation(a.truncation(), b.truncation());
    int order = std::min(sat_add(a.order(), b.valuation()), sat_add(b.order(), a.valuation()));
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<MultiPoly> out;
    if (!ca.empty() && !cb.empty()) {
        long long len = std::min<long long>(static_cast<long long>(ca.size() + cb.size() - 1), order);
        out.resize(len);
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (ca[i].is_zero()) continue;
            for (std::size_t j = 0; j < cb.size() && static_cast<long long>(i + j) < len; ++j) {
                if (cb[j].is_zero()) continue;
                out[i + j] += MultiPoly::mul(ca[i], cb[j], t);
            }
        }
    }
    return TruncSeries::from_coeffs(a.var(), std::move(out), order, t);
}

TruncSeries series_inv(const TruncSeries& a, int order) {
    int n = resolve_order(a, order, "inverse");
    const Truncation& t = a.truncation();
    if (n == 0) return TruncSeries(a.var(), 0, t);
    MultiPoly c0inv = invert(a[0], t);
    if (n == TruncSeries::kExact) return TruncSeries::constant(a.var(), c0inv, t);
    std::vector<MultiPoly> b(n);
    b[0] = c0inv;
    const auto& ca = a.coeffs();
    for (int k = 1; k < n; ++k) {
        MultiPoly s;
        for (int i = 1; i <= k && i < static_cast<int>(ca.size()); ++i) {
            if (ca[i].is_zero() || b[k - i].is_zero()) continue;
            s += MultiPoly::mul(ca[i], b[k - i], t);
        }
        b[k] = -MultiPoly::mul(c0inv, s, t);
    }
    return TruncSeries::from_coeffs(a.var(), std::move(b), n, t);
}

TruncSeries series_exp(const TruncSeries& a, int order) {
    if (a.order() > 0 && !a.coeffs().empty() && !a.coeffs()[0].is_zero())
        throw std::invalid_argument("exp of a series with nonzero constant term");
    int n = resolve_order(a, order, "exp");
    const Truncation& t = a.truncation();
    if (n == TruncSeries::kExact) return TruncSeries::constant(a.var(), MultiPoly(1), t);
    if (n == 0) return TruncSeries(a.var(), 0, t);
    std::vector<MultiPoly> b(n);
    b[0] = MultiPoly(1);
    const auto& ca = a.coeffs();
    for (int k = 1; k < n; ++k) {
        MultiPoly s;
        for (int i = 1; i <= k && i < static_cast<int>(ca.size()); ++i) {
            if (ca[i].is_zero() || b[k - i].is_zero()) continue;
            s += MultiPoly::mul(ca[i], b[k - i], t) * Rational(i);
        }
        b[k] = s * Rational(mpz_class(1), mpz_class(k));
    }
    return TruncSeries::from_coeffs(a.var(), std::move(b), n, t);
}

TruncSeries series_hyp(const TruncSeries& a, Hyp kind, int order) {
    TruncSeries e = series_exp(a, order);
    TruncSeries ei = series_exp(-a, order);
    Rational half(mpz_class(1), mpz_class(2));
    switch (kind) {
        case Hyp::sinh: return (e - ei).scaled(half);
        case Hyp::cosh: return (e + ei).scaled(half);
        case Hyp::tanh: return (e - ei) * series_inv(e + ei);
    }
    throw std::invalid_argument("unknown hyperbolic kind");
}

TruncSeries substitute(const TruncSeries& a, const TruncSeries& r) {
    const Truncation& t = merge_truncation(a.truncation(), r.truncation());
    int v = r.valuation();
    if (v == 0 && !a.exact())
        throw std::invalid_argument("composition with a nonzero constant term needs a polynomial outer series");
    int cap = a.exact() ? TruncSeries::kExact : sat_mul(a.order(), v);
    const auto& ca = a.coeffs();
    TruncSeries result = TruncSeries::polynomial(r.var(), {}, t);
    for (int i = static_cast<int>(ca.size()) - 1; i >= 0; --i) {
        result = result * r + TruncSeries::constant(r.var(), ca[i], t);
    }
    if (ca.empty()) result = TruncSeries(r.var(), cap, t);
    return result.with_order(cap);
}

TruncSeries substitute_var(const TruncSeries& a, Var v, const TruncSeries& r) {
    if (a.var() != r.var())
        throw RingMismatch("substitute_var needs a replacement in the same series variable");
    int top = 0;
    for (const auto& c : a.coeffs()) {
        if (c.is_zero()) continue;
        if (c.min_exp(v) < 0) throw std::invalid_argument("substitute_var: negative power of the variable");
        top = std::max(top, c.max_exp(v));
    }
    const Truncation& t = merge_truncation(a.truncation(), r.truncation());
    TruncSeries result = TruncSeries(a.var(), a.order(), t);
    TruncSeries rp = TruncSeries::constant(a.var(), MultiPoly(1), t);
    for (int e = 0; e <= top; ++e) {
        std::vector<MultiPoly> part;
        part.reserve(a.coeffs().size());
        for (const auto& c : a.coeffs()) part.push_back(c.coefficient(v, e));
        TruncSeries pe = TruncSeries::from_coeffs(a.var(), std::move(part), a.order(), t);
        if (!pe.is_zero()) result += pe * rp;
        if (e < top) rp = rp * r;
    }
    return result;
}

TruncSeries derivative(const TruncSeries& a) {
    std::vector<MultiPoly> out;
    const auto& ca = a.coeffs();
    for (std::size_t i = 1; i < ca.size(); ++i) out.push_back(ca[i] * Rational(static_cast<long>(i)));
    int order = a.exact() ? TruncSeries::kExact : std::max(a.order() - 1, 0);
    return TruncSeries::from_coeffs(a.var(), std::move(out), order, a.truncation());
}

LaurentSeries::LaurentSeries(TruncSeries body, int shift) : shift_(shift), body_(std::move(body)) {}

int LaurentSeries::abs_order() const {
    return body_.exact() ? TruncSeries::kExact : shift_ + body_.order();
}

MultiPoly LaurentSeries::coefficient(int e) const {
    if (e < shift_) return MultiPoly();
    if (e >= abs_order())
        throw InsufficientPrecision(std::string("Laurent series in ") + var(), e, abs_order());
    return body_[e - shift_];
}

LaurentSeries LaurentSeries::normalized() const {
    int v = body_.valuation();
    if (v == 0) return *this;
    if (v >= body_.order()) {
        if (body_.exact()) return LaurentSeries(body_, 0);
        return LaurentSeries(TruncSeries(body_.var(), 0, body_.truncation()), shift_ + body_.order());
    }
    return LaurentSeries(body_.shifted_down(v), shift_ + v);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int s = std::min(a.shift_, b.shift_);
    return LaurentSeries(a.body_.shifted_up(a.shift_ - s) + b.body_.shifted_up(b.shift_ - s), s);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    return LaurentSeries(a.body_ * b.body_, a.shift_ + b.shift_);
}

LaurentSeries LaurentSeries::inverse(int rel_order) const {
    LaurentSeries n = normalized();
    if (n.body_.is_zero()) throw NotInvertible("inverse of a series with no known nonzero term");
    return LaurentSeries(series_inv(n.body_, rel_order), -n.shift_);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return laurent_div(a, b); }

LaurentSeries LaurentSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    LaurentSeries result(TruncSeries::constant(var(), MultiPoly(1), body_.truncation())), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string LaurentSeries::str() const {
    return var() + std::string("^") + std::to_string(shift_) + " * (" + body_.str() + ")";
}

LaurentSeries laurent_div(const LaurentSeries& num, const LaurentSeries& den) {
    LaurentSeries d = den.normalized();
    int rel = -1;
    if (d.exact() && d.body().degree() > 0) {
        LaurentSeries n = num.normalized();
        if (n.exact()) throw std::invalid_argument("quotient of polynomials needs an explicit order");
        rel = n.body().order();
    }
    return num * d.inverse(rel);
}

LaurentSeries derivative(const LaurentSeries& a) {
    const auto& ca = a.body().coeffs();
    std::vector<MultiPoly> out;
    out.reserve(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) out.push_back(ca[i] * Rational(static_cast<long>(a.shift() + i)));
    return LaurentSeries(TruncSeries::from_coeffs(a.var(), std::move(out), a.body().order(), a.body().truncation()),
                         a.shift() - 1);
}

MultiPoly residue(const LaurentSeries& a) { return a.coefficient(-1); }

}  // namespace enumpw
