#include "rmtori/series.hpp"

namespace rmtori {

Polynomial<QRatFun> BiPoly::as_poly_in_u() const {
    long du = degree_u();
    if (du < 0) return {};
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(du) + 1);
    for (const auto& [k, v] : terms_) {
        auto& row = rows[static_cast<std::size_t>(k.second)];
        if (row.size() <= static_cast<std::size_t>(k.first))
            row.resize(static_cast<std::size_t>(k.first) + 1, Rational(0));
        row[static_cast<std::size_t>(k.first)] = v;
    }
    std::vector<QRatFun> coeffs;
    coeffs.reserve(rows.size());
    for (auto& row : rows)
        coeffs.emplace_back(QPoly(std::move(row)), QPoly::constant(1));
    return Polynomial<QRatFun>(std::move(coeffs));
}

BiPoly BiPoly::from_poly_in_u(const Polynomial<QPoly>& p) {
    std::map<Key, Rational> terms;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const QPoly& cj = p.coeffs()[j];
        for (std::size_t i = 0; i < cj.coeffs().size(); ++i)
            if (cj.coeffs()[i] != 0)
                terms[{static_cast<long>(i), static_cast<long>(j)}] = cj.coeffs()[i];
    }
    return BiPoly(std::move(terms));
}

namespace {

// Content (gcd over Q[t]) of a u-polynomial with Q[t] coefficients.
QPoly content_t(const Polynomial<QRatFun>& p, QPoly& common_den) {
    // Clear denominators first.
    common_den = QPoly::constant(1);
    for (const auto& c : p.coeffs())
        common_den = common_den.divmod(poly_gcd(common_den, c.den())).first * c.den();
    QPoly cont;  // zero
    for (const auto& c : p.coeffs()) {
        QPoly cleared = c.num() * common_den.divmod(c.den()).first;
        cont = poly_gcd(cont, cleared);
    }
    return cont;
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // gcd of contents in Q[t] times the primitive gcd computed over Q(t)[u].
    Polynomial<QRatFun> pa = a.as_poly_in_u();
    Polynomial<QRatFun> pb = b.as_poly_in_u();
    QPoly da, db;
    QPoly ca = content_t(pa, da);
    QPoly cb = content_t(pb, db);
    QPoly cont = poly_gcd(ca, cb);

    Polynomial<QRatFun> g = poly_gcd(pa, pb);  // monic in u over Q(t)
    // Clear Q(t) denominators of g and take the primitive part over Q[t].
    QPoly gden;
    QPoly gcont = content_t(g, gden);
    std::vector<QPoly> cleared;
    cleared.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs()) {
        QPoly num = c.num() * gden.divmod(c.den()).first;
        cleared.push_back(gcont.is_zero() ? num : num.divmod(gcont).first);
    }
    Polynomial<QPoly> primitive(std::move(cleared));
    BiPoly result = BiPoly::from_poly_in_u(primitive) * BiPoly::from_poly_in_u(
                        Polynomial<QPoly>(std::vector<QPoly>{cont}));
    return result;
}

BiRationalFunction::BiRationalFunction(BiPoly num, BiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("BiRationalFunction: zero denominator");
    if (!num_.is_zero()) {
        BiPoly g = bipoly_gcd(num_, den_);
        bool nontrivial = g.terms().size() > 1 ||
                          (g.terms().size() == 1 && g.terms().begin()->first != BiPoly::Key{0, 0});
        if (nontrivial) {
            // Exact division via the u-polynomial view over Q(t).
            auto divide = [&](const BiPoly& p) {
                auto [q, r] = p.as_poly_in_u().divmod(g.as_poly_in_u());
                if (!r.is_zero()) throw InternalError("BiRationalFunction: gcd does not divide");
                // q has Q(t) coefficients that are actual polynomials here.
                std::map<BiPoly::Key, Rational> terms;
                for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
                    const QRatFun& c = q.coeffs()[j];
                    if (c.den().degree() != 0)
                        throw InternalError("BiRationalFunction: non-polynomial quotient");
                    Rational scale = Rational(1) / c.den().constant_term();
                    for (std::size_t i = 0; i < c.num().coeffs().size(); ++i) {
                        Rational v = c.num().coeffs()[i] * scale;
                        if (v != 0) terms[{static_cast<long>(i), static_cast<long>(j)}] = v;
                    }
                }
                return BiPoly(std::move(terms));
            };
            num_ = divide(num_);
            den_ = divide(den_);
        }
    }
    Rational c0 = den_.at(0, 0);
    if (c0 == 0) throw ZeroConstantTermError("BiRationalFunction: denominator constant term is 0");
    if (c0 != 1) {
        Rational inv = Rational(1) / c0;
        std::map<BiPoly::Key, Rational> n2, d2;
        for (const auto& [k, v] : num_.terms()) n2[k] = v * inv;
        for (const auto& [k, v] : den_.terms()) d2[k] = v * inv;
        num_ = BiPoly(std::move(n2));
        den_ = BiPoly(std::move(d2));
    }
}

std::vector<std::vector<Rational>> BiRationalFunction::coefficients(std::size_t deg_t,
                                                                    std::size_t deg_u) const {
    Rational d0 = den_.at(0, 0);
    if (d0 == 0) throw ZeroConstantTermError("coefficients: denominator vanishes at (0,0)");
    std::vector<std::vector<Rational>> c(deg_t + 1, std::vector<Rational>(deg_u + 1, Rational(0)));
    for (std::size_t i = 0; i <= deg_t; ++i) {
        for (std::size_t j = 0; j <= deg_u; ++j) {
            Rational acc = num_.at(static_cast<long>(i), static_cast<long>(j));
            for (const auto& [k, v] : den_.terms()) {
                if (k.first == 0 && k.second == 0) continue;
                if (k.first > static_cast<long>(i) || k.second > static_cast<long>(j)) continue;
                acc -= v * c[i - static_cast<std::size_t>(k.first)][j - static_cast<std::size_t>(k.second)];
            }
            c[i][j] = acc / d0;
        }
    }
    return c;
}

BiRationalFunction twist_series_F(const Integer& n, const Integer& m) {
    Rational mn(m - n);
    BiPoly num = BiPoly::constant(Rational(m)) +
                 BiPoly::monomial(1, 1, Rational(m));  // M (1 + t u)
    BiPoly den_u = BiPoly::constant(1) - BiPoly::monomial(0, 1, Rational(n)) +
                   BiPoly::monomial(0, 2, 1);  // 1 - N u + u^2
    BiPoly den_t = BiPoly::constant(1) - BiPoly::monomial(1, 0, mn) +
                   BiPoly::monomial(2, 0, 1);  // 1 - (M-N) t + t^2
    return BiRationalFunction(num, den_u * den_t);
}

QuadRatFun twist_series_R(const Integer& n, const Integer& m, const QuadNum& r) {
    if (r.is_zero() || r + r.inv() != QuadNum::integer(n, r.D()))
        throw EigenvalueMismatchError("twist_series_R: r + 1/r != N");
    QuadNum one = QuadNum::rational(1, r.D());
    QuadNum r2 = r * r;
    QuadNum mn = QuadNum::integer(m - n, r.D());
    QuadPoly num(std::vector<QuadNum>{one, r2});
    QuadPoly den(std::vector<QuadNum>{one, -(mn * r), r2});
    return QuadRatFun(std::move(num), std::move(den));
}

}  // namespace rmtori
