#pragma once

#include "rmtori/errors.hpp"
#include "rmtori/numeric.hpp"
#include "rmtori/quadfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rmtori {

/// Multiplicative identity of the coefficient field K.
template <typename K>
struct FieldOne;

template <typename K>
K field_one() {
    return FieldOne<K>::value();
}

/// Dense univariate polynomial over an exact field K (Rational, QuadNum, or
/// a RationalFunction used as a field of fractions).
/// The zero polynomial has an empty coefficient vector.
template <typename K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(K v) { return Polynomial(std::vector<K>{std::move(v)}); }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero

    K at(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
    K constant_term() const { return at(0); }
    K leading() const { return c_.empty() ? K() : c_.back(); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = at(i) + o.at(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = at(i) - o.at(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<K> r = c_;
        for (auto& v : r) v = K() - v;
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<K> r(c_.size() + o.c_.size() - 1, K());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial scaled(const K& s) const {
        std::vector<K> r = c_;
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Substitution t -> -t.
    Polynomial negate_variable() const {
        std::vector<K> r = c_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = K() - r[i];
        return Polynomial(std::move(r));
    }

    K evaluate(const K& t) const {
        K acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    /// Euclidean division; returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& den) const {
        if (den.is_zero()) throw DivisionByZeroError("Polynomial: division by zero polynomial");
        Polynomial rem = *this;
        std::vector<K> q;
        if (degree() >= den.degree())
            q.assign(static_cast<std::size_t>(degree() - den.degree()) + 1, K());
        K lead_inv = K();
        bool have_inv = false;
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            if (!have_inv) {
                lead_inv = unit_of(den.leading());
                have_inv = true;
            }
            K coef = rem.leading() * lead_inv;
            std::size_t shift = static_cast<std::size_t>(rem.degree() - den.degree());
            q[shift] = coef;
            std::vector<K> sub(shift + den.c_.size(), K());
            for (std::size_t i = 0; i < den.c_.size(); ++i) sub[shift + i] = den.c_[i] * coef;
            rem = rem - Polynomial(std::move(sub));
        }
        return {Polynomial(std::move(q)), rem};
    }

private:
    static K unit_of(const K& lead) { return field_one<K>() / lead; }

    void trim() {
        while (!c_.empty() && c_.back() == K()) c_.pop_back();
    }

    std::vector<K> c_;
};

template <>
struct FieldOne<Rational> {
    static Rational value() { return Rational(1); }
};
template <>
struct FieldOne<QuadNum> {
    static QuadNum value() { return QuadNum::rational(1); }
};

/// Monic gcd via Euclid over the coefficient field.
template <typename K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(field_one<K>() / a.leading());
}

/// Exact rational function num/den in one variable, stored reduced with the
/// denominator normalized to constant term 1 (or monic when the constant
/// term vanishes, which never happens for the series this library produces).
template <typename K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial<K>::constant(field_one<K>())) {}

    RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroError("RationalFunction: zero denominator");
        reduce();
    }

    static RationalFunction constant(K v) {
        return RationalFunction(Polynomial<K>::constant(std::move(v)),
                                Polynomial<K>::constant(field_one<K>()));
    }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw DivisionByZeroError("RationalFunction: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;  // canonical forms
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Substitution t -> -t.
    RationalFunction negate_variable() const {
        return RationalFunction(num_.negate_variable(), den_.negate_variable());
    }

    RationalFunction reciprocal() const {
        if (is_zero()) throw DivisionByZeroError("RationalFunction: reciprocal of zero");
        return RationalFunction(den_, num_);
    }

    /// First n+1 Taylor coefficients; requires den(0) != 0.
    std::vector<K> coefficients(std::size_t n) const {
        K d0 = den_.constant_term();
        if (d0 == K()) throw ZeroConstantTermError("coefficients: denominator vanishes at 0");
        K d0_inv = field_one<K>() / d0;
        std::size_t den_deg = den_.is_zero() ? 0 : static_cast<std::size_t>(den_.degree());
        std::vector<K> c(n + 1, K());
        for (std::size_t i = 0; i <= n; ++i) {
            K acc = num_.at(i);
            for (std::size_t j = 1; j <= i && j <= den_deg; ++j)
                acc = acc - den_.at(j) * c[i - j];
            c[i] = acc * d0_inv;
        }
        return c;
    }

private:
    void reduce() {
        Polynomial<K> g = poly_gcd(num_, den_);
        if (!g.is_zero() && g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        K c0 = den_.constant_term();
        K scale = (c0 == K()) ? (field_one<K>() / den_.leading()) : (field_one<K>() / c0);
        den_ = den_.scaled(scale);
        num_ = num_.scaled(scale);
    }

    Polynomial<K> num_, den_;
};

template <typename K>
struct FieldOne<RationalFunction<K>> {
    static RationalFunction<K> value() { return RationalFunction<K>::constant(field_one<K>()); }
};

using QPoly = Polynomial<Rational>;
using QRatFun = RationalFunction<Rational>;
using QuadPoly = Polynomial<QuadNum>;
using QuadRatFun = RationalFunction<QuadNum>;

/// Hilbert series (1 + (M-N) t + t^2) / (1 - N t + t^2) of the graded algebra
/// attached to a profile with trace N and chi-value M.
inline QRatFun hilbert_series(const Integer& n, const Integer& m) {
    QPoly num(std::vector<Rational>{1, Rational(m - n), 1});
    QPoly den(std::vector<Rational>{1, Rational(-n), 1});
    return QRatFun(std::move(num), std::move(den));
}

/// H(-t)^{-1}; for Hilbert series this swaps N with M - N.
template <typename K>
RationalFunction<K> dual_series(const RationalFunction<K>& f) {
    if (f.num().constant_term() == K())
        throw ZeroConstantTermError("dual_series: series has zero constant term");
    return f.negate_variable().reciprocal();
}

/// First index in [1, horizon] whose coefficient is <= 0 (zero counts), or
/// nullopt when all are strictly positive.
template <typename K>
std::optional<std::size_t> positivity_scan(const RationalFunction<K>& f, std::size_t horizon) {
    auto c = f.coefficients(horizon);
    for (std::size_t i = 1; i <= horizon; ++i) {
        bool positive;
        if constexpr (std::is_same_v<K, Rational>) {
            positive = c[i] > 0;
        } else {
            positive = c[i].sign() > 0;
        }
        if (!positive) return i;
    }
    return std::nullopt;
}

/// Sparse bivariate polynomial over Q in variables (t, u).
class BiPoly {
public:
    using Key = std::pair<long, long>;  // (t-exponent, u-exponent)

    BiPoly() = default;
    explicit BiPoly(std::map<Key, Rational> terms) : terms_(std::move(terms)) { trim(); }

    static BiPoly constant(Rational v) {
        std::map<Key, Rational> t;
        if (v != 0) t[{0, 0}] = std::move(v);
        return BiPoly(std::move(t));
    }
    static BiPoly monomial(long i, long j, Rational v) {
        std::map<Key, Rational> t;
        if (v != 0) t[{i, j}] = std::move(v);
        return BiPoly(std::move(t));
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational at(long i, long j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    BiPoly operator+(const BiPoly& o) const {
        std::map<Key, Rational> r = terms_;
        for (const auto& [k, v] : o.terms_) r[k] += v;
        return BiPoly(std::move(r));
    }
    BiPoly operator-(const BiPoly& o) const {
        std::map<Key, Rational> r = terms_;
        for (const auto& [k, v] : o.terms_) r[k] -= v;
        return BiPoly(std::move(r));
    }
    BiPoly operator*(const BiPoly& o) const {
        std::map<Key, Rational> r;
        for (const auto& [k1, v1] : terms_)
            for (const auto& [k2, v2] : o.terms_)
                r[{k1.first + k2.first, k1.second + k2.second}] += v1 * v2;
        return BiPoly(std::move(r));
    }

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    long degree_t() const {
        long d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first);
        return d;
    }
    long degree_u() const {
        long d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.second);
        return d;
    }

    /// View as a polynomial in u whose coefficients are elements of Q(t).
    Polynomial<QRatFun> as_poly_in_u() const;
    static BiPoly from_poly_in_u(const Polynomial<QPoly>& p);

private:
    void trim() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }

    std::map<Key, Rational> terms_;
};

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

/// Reduced bivariate rational function with denominator constant term 1.
class BiRationalFunction {
public:
    BiRationalFunction() : num_(), den_(BiPoly::constant(1)) {}
    BiRationalFunction(BiPoly num, BiPoly den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    BiRationalFunction operator+(const BiRationalFunction& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    BiRationalFunction operator-(const BiRationalFunction& o) const {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }
    BiRationalFunction operator*(const BiRationalFunction& o) const {
        return {num_ * o.num_, den_ * o.den_};
    }

    /// Equality as rational functions (cross-multiplication).
    bool equals(const BiRationalFunction& o) const {
        return (num_ * o.den_) == (o.num_ * den_);
    }
    bool operator==(const BiRationalFunction& o) const { return equals(o); }

    /// Power-series coefficients c[i][j] of t^i u^j up to the given degrees.
    /// Requires nonzero constant term in the denominator.
    std::vector<std::vector<Rational>> coefficients(std::size_t deg_t, std::size_t deg_u) const;

private:
    BiPoly num_, den_;
};

/// Generating series F(t, u) = M (1 + t u) / ((1 - N u + u^2)(1 - (M-N) t + t^2))
/// of the twist-orbit pairing table: the t^n u^k coefficient is the pairing of
/// the n-th twisted object against the (n+k+1)-st orbit object.
BiRationalFunction twist_series_F(const Integer& n, const Integer& m);

/// Generating series R(t) = (1 + r^2 t) / (1 - (M-N) r t + r^2 t^2) of the
/// C-ranks of the twisted objects; r must satisfy r + 1/r = N.
QuadRatFun twist_series_R(const Integer& n, const Integer& m, const QuadNum& r);

}  // namespace rmtori
