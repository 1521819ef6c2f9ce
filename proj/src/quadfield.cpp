#include "rmtori/quadfield.hpp"

#include <map>
#include <tuple>

namespace rmtori {

void QuadNum::check_d(const Integer& d) {
    if (d < 2) throw Error("QuadNum: D must be >= 2, got " + d.str());
    auto [f, sf] = squarefree_decompose(d);
    if (f != 1) throw Error("QuadNum: D must be squarefree, got " + d.str());
}

Integer QuadNum::joint_d(const QuadNum& o) const {
    if (is_rational()) return o.d_;
    if (o.is_rational()) return d_;
    if (d_ != o.d_)
        throw MismatchedFieldError("QuadNum: mixing sqrt(" + d_.str() + ") with sqrt(" +
                                   o.d_.str() + ")");
    return d_;
}

Integer QuadNum::floor() const {
    if (is_rational()) return rational_floor(x_);
    // Bracket with rational bounds |y| sqrt(D) <= |y| (isqrt(D)+1), then
    // binary-search the integer part using the exact sign predicate.
    Rational bound = (x_ > 0 ? x_ : -x_) + (y_ > 0 ? y_ : -y_) * Rational(isqrt(d_) + 1);
    Integer lo = -rational_ceil(bound) - 1;
    Integer hi = rational_ceil(bound) + 1;
    // Invariant: lo <= floor(*this) < hi.
    while (hi - lo > 1) {
        Integer mid = floor_div(lo + hi, 2);
        if ((*this - QuadNum(d_, Rational(mid), 0)).sign() >= 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::string QuadNum::str() const {
    if (is_rational()) return x_.str();
    std::string s = x_ == 0 ? "" : x_.str();
    if (y_ == 1)
        s += (s.empty() ? "" : "+") + std::string("sqrt(") + d_.str() + ")";
    else if (y_ == -1)
        s += "-sqrt(" + d_.str() + ")";
    else {
        std::string ys = y_.str();
        if (!s.empty() && ys[0] != '-') s += "+";
        s += ys + "*sqrt(" + d_.str() + ")";
    }
    return s;
}

QuadOrder::QuadOrder(Integer a, Integer b, Integer c)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
    if (alpha <= 0) throw InvalidOrderError("QuadOrder: alpha must be positive");
    if (int_gcd(int_gcd(int_abs(alpha), int_abs(beta)), int_abs(gamma)) != 1)
        throw InvalidOrderError("QuadOrder: gcd(alpha, beta, gamma) must be 1");
    Integer disc = discriminant();
    if (disc <= 0) throw InvalidOrderError("QuadOrder: discriminant must be positive");
    if (is_perfect_square(disc))
        throw InvalidOrderError("QuadOrder: discriminant is a perfect square (rational root)");
}

static QuadNum order_root(const QuadOrder& order, int sqrt_sign) {
    auto [f, d] = squarefree_decompose(order.discriminant());
    Rational two_alpha = Rational(2 * order.alpha);
    return QuadNum(d, Rational(-order.beta) / two_alpha,
                   Rational(sqrt_sign * f) / two_alpha);
}

QuadNum theta_of(const QuadOrder& order) { return order_root(order, +1); }
QuadNum theta_conjugate_of(const QuadOrder& order) { return order_root(order, -1); }

QuadNum fractional_linear(const SL2Matrix& g, const QuadNum& theta) {
    if (theta.is_rational())
        throw RationalThetaError("fractional_linear: theta must be irrational (use the ext form)");
    QuadNum num = QuadNum::rational(Rational(g.a), theta.D()) * theta +
                  QuadNum::rational(Rational(g.b), theta.D());
    QuadNum den = QuadNum::rational(Rational(g.c), theta.D()) * theta +
                  QuadNum::rational(Rational(g.d), theta.D());
    return num / den;  // den != 0: theta irrational
}

std::optional<QuadNum> fractional_linear_ext(const SL2Matrix& g,
                                             const std::optional<QuadNum>& theta) {
    if (!theta.has_value()) {
        if (g.c == 0) return std::nullopt;
        return QuadNum::rational(Rational(g.a) / Rational(g.c));
    }
    const QuadNum& t = *theta;
    QuadNum den = QuadNum::rational(Rational(g.c), t.D()) * t + QuadNum::rational(Rational(g.d), t.D());
    if (den.is_zero()) return std::nullopt;
    QuadNum num = QuadNum::rational(Rational(g.a), t.D()) * t + QuadNum::rational(Rational(g.b), t.D());
    return num / den;
}

std::pair<QuadNum, QuadNum> fixed_points(const SL2Matrix& g) {
    Integer t = trace(g);
    if (t == 2 || t == -2)
        throw UnipotentOrRationalError("fixed_points: unipotent matrix (trace " + t.str() + ")");
    if (t < 3)
        throw NotHyperbolicError("fixed_points: eigenvalues not positive real (trace " +
                                 t.str() + ")");
    if (g.c == 0) throw InfinityFixedError("fixed_points: c = 0, infinity is fixed");
    // Roots of c t^2 + (d - a) t - b = 0; discriminant (d-a)^2 + 4bc = N^2 - 4.
    Integer disc = t * t - 4;
    auto [f, d] = squarefree_decompose(disc);  // never a perfect square for |t| >= 3
    Rational two_c = Rational(2 * g.c);
    QuadNum plus(d, Rational(g.a - g.d) / two_c, Rational(f) / two_c);
    return {plus, plus.conj()};
}

bool halfplane_test(const QuadNum& theta, const KVector& v) {
    if (theta.is_rational()) throw RationalThetaError("halfplane_test: theta must be irrational");
    QuadNum val = QuadNum::rational(Rational(v.deg), theta.D()) -
                  theta * QuadNum::rational(Rational(v.rk), theta.D());
    return val.sign() > 0;
}

ContinuedFraction continued_fraction(const QuadNum& theta, std::size_t count) {
    if (theta.is_rational())
        throw RationalThetaError("continued_fraction: theta must be irrational");
    ContinuedFraction cf;
    // Complete quotients keyed by exact value (x, y over fixed D).
    std::map<std::pair<Rational, Rational>, std::size_t> seen;
    QuadNum xi = theta;
    bool period_found = false;
    for (std::size_t i = 0; !period_found || cf.quotients.size() < count; ++i) {
        if (!period_found) {
            auto key = std::make_pair(xi.x(), xi.y());
            auto it = seen.find(key);
            if (it != seen.end()) {
                cf.period_start = it->second;
                cf.period_length = i - it->second;
                period_found = true;
            } else {
                seen.emplace(key, i);
            }
        }
        if (period_found && cf.quotients.size() >= count) break;
        Integer a;
        if (period_found) {
            // Extend by periodicity instead of iterating the recurrence.
            std::size_t j = cf.period_start +
                            (cf.quotients.size() - cf.period_start) % cf.period_length;
            a = cf.quotients[j];
        } else {
            a = xi.floor();
            xi = (xi - QuadNum::integer(a, xi.D())).inv();
        }
        cf.quotients.push_back(a);
    }
    return cf;
}

namespace {

// GL2(Z) matrix with det +-1, used only for continued-fraction products.
struct Gl2 {
    Integer a{1}, b{0}, c{0}, d{1};

    Gl2 mul(const Gl2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Gl2 inv() const {  // assumes det = +-1
        Integer det = a * d - b * c;
        return {det * d, det * -b, det * -c, det * a};
    }
    Integer det() const { return a * d - b * c; }
};

Gl2 step_matrix(const Integer& a) { return {a, 1, 1, 0}; }

}  // namespace

QuadNum unit_below_one(const QuadOrder& order) {
    QuadNum theta = theta_of(order);
    // The continued-fraction period of theta generates the stabilizer of the
    // lattice Z + Z*theta, whose multiplier ring is exactly Z[alpha*theta].
    ContinuedFraction cf = continued_fraction(theta, 0);

    Gl2 prefix;  // M(a_0) ... M(a_{k-1})
    for (std::size_t i = 0; i < cf.period_start; ++i)
        prefix = prefix.mul(step_matrix(cf.quotients[i]));
    Gl2 cycle;  // M(a_k) ... M(a_{k+l-1})
    for (std::size_t i = cf.period_start; i < cf.period_start + cf.period_length; ++i)
        cycle = cycle.mul(step_matrix(cf.quotients[i]));
    if (cycle.det() == -1) cycle = cycle.mul(cycle);  // odd period: square to norm +1

    Gl2 conj = prefix.mul(cycle).mul(prefix.inv());
    SL2Matrix g(conj.a, conj.b, conj.c, conj.d);

    QuadNum r = QuadNum::rational(Rational(g.c), theta.D()) * theta +
                QuadNum::rational(Rational(g.d), theta.D());
    if (r.sign() < 0) {
        g = SL2Matrix(-g.a, -g.b, -g.c, -g.d);
        r = -r;
    }
    if (r > QuadNum::rational(1, theta.D())) {
        g = inverse(g);
        r = QuadNum::rational(Rational(g.c), theta.D()) * theta +
            QuadNum::rational(Rational(g.d), theta.D());
    }
    if (!(r.norm() == 1) || r.sign() <= 0 || !(r < QuadNum::rational(1, theta.D())))
        throw InternalError("unit_below_one: period matrix did not yield a unit in (0,1)");
    if (fractional_linear(g, theta) != theta)
        throw InternalError("unit_below_one: stabilizer matrix does not fix theta");
    return r;
}

SL2Matrix matrix_of_unit(const QuadOrder& order, const QuadNum& r) {
    QuadNum theta = theta_of(order);
    if (r.norm() != 1) throw NotAUnitError("matrix_of_unit: norm(r) != 1");
    if (!(r.sign() > 0) || !(r < QuadNum::rational(1, theta.D())))
        throw NotAUnitError("matrix_of_unit: unit not in (0, 1)");
    if (r.is_rational() || r.D() != theta.D())
        throw NotAUnitError("matrix_of_unit: r not an irrational element of Q(sqrt(D))");

    auto as_integer = [](const Rational& q) -> Integer {
        if (boost::multiprecision::denominator(q) != 1)
            throw NotAUnitError("matrix_of_unit: multiplication by r does not preserve Z + Z*theta");
        return boost::multiprecision::numerator(q);
    };

    // r = c*theta + d.
    Rational c_q = r.y() / theta.y();
    Rational d_q = r.x() - c_q * theta.x();
    // r*theta = a*theta + b.
    QuadNum rt = r * theta;
    Rational a_q = rt.y() / theta.y();
    Rational b_q = rt.x() - a_q * theta.x();

    Integer a = as_integer(a_q), b = as_integer(b_q), c = as_integer(c_q), d = as_integer(d_q);
    if (a * d - b * c != 1)
        throw NotAUnitError("matrix_of_unit: determinant of multiplication matrix is not 1");
    SL2Matrix g(a, b, c, d);

    // (theta, 1) must be an eigenvector with eigenvalue r.
    QuadNum lhs0 = QuadNum::rational(Rational(g.a), theta.D()) * theta +
                   QuadNum::rational(Rational(g.b), theta.D());
    if (lhs0 != r * theta)
        throw InternalError("matrix_of_unit: eigenvector identity failed");
    return g;
}

EigenFrame eigen_frame(const SL2Matrix& g, const KVector& v0) {
    if (classify_eigen(g) != EigenClass::HyperbolicPositive)
        throw NotHyperbolicError("eigen_frame: matrix is not hyperbolic with positive eigenvalues");
    Integer m_val = chi(v0, act(g, v0));
    if (m_val == 0)
        throw EigenvectorBaseError("eigen_frame: base vector is proportional to an eigenvector");

    Integer n = trace(g);
    auto [f, d] = squarefree_decompose(n * n - 4);
    QuadNum r(d, Rational(n) / 2, Rational(-f) / 2);          // (N - sqrt(N^2-4)) / 2, in (0,1)
    QuadNum rinv(d, Rational(n) / 2, Rational(f) / 2);        // conjugate root

    auto scale = (r - rinv).inv();
    auto qn = [&](const Integer& v) { return QuadNum::integer(v, d); };

    // u = (g - r^{-1} I) v0 / (r - r^{-1});  u' = v0 - u.
    std::array<QuadNum, 2> gv0{qn(g.a * v0.deg + g.b * v0.rk), qn(g.c * v0.deg + g.d * v0.rk)};
    std::array<QuadNum, 2> u{(gv0[0] - rinv * qn(v0.deg)) * scale,
                             (gv0[1] - rinv * qn(v0.rk)) * scale};
    std::array<QuadNum, 2> uprime{qn(v0.deg) - u[0], qn(v0.rk) - u[1]};

    QuadNum delta = qn(m_val) / (rinv - r);

    EigenFrame frame{g, r, u, uprime, delta};

    // Verify every defining identity exactly before returning.
    auto apply = [&](const std::array<QuadNum, 2>& v) {
        return std::array<QuadNum, 2>{qn(g.a) * v[0] + qn(g.b) * v[1],
                                      qn(g.c) * v[0] + qn(g.d) * v[1]};
    };
    auto gu = apply(u);
    auto gup = apply(uprime);
    if (gu[0] != r * u[0] || gu[1] != r * u[1])
        throw InternalError("eigen_frame: g u != r u");
    if (gup[0] != rinv * uprime[0] || gup[1] != rinv * uprime[1])
        throw InternalError("eigen_frame: g u' != r^{-1} u'");
    if (EigenFrame::chi_q(u, uprime) != delta)
        throw InternalError("eigen_frame: chi(u, u') != delta");
    return frame;
}

}  // namespace rmtori
