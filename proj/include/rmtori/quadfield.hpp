#pragma once

#include "rmtori/errors.hpp"
#include "rmtori/lattice.hpp"
#include "rmtori/numeric.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rmtori {

/// An element x + y*sqrt(D) of the real quadratic field Q(sqrt(D)),
/// D squarefree, D >= 2, with exact rational coordinates.
///
/// Values with y == 0 are plain rationals and combine freely with values
/// over any D; mixing two genuinely irrational values over different D
/// raises MismatchedFieldError. All comparisons are exact (no floating
/// point): the sign of x + y*sqrt(D) is decided by comparing x^2 with D y^2.
class QuadNum {
public:
    QuadNum() : d_(2), x_(0), y_(0) {}

    QuadNum(Integer d, Rational x, Rational y) : d_(std::move(d)), x_(std::move(x)), y_(std::move(y)) {
        check_d(d_);
    }

    static QuadNum rational(Rational x, Integer d = 2) { return QuadNum(std::move(d), std::move(x), 0); }
    static QuadNum integer(Integer n, Integer d = 2) { return QuadNum(std::move(d), Rational(n), 0); }
    /// sqrt(d) itself.
    static QuadNum sqrt_d(Integer d) { return QuadNum(std::move(d), 0, 1); }

    const Integer& D() const { return d_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    /// Rational value; requires y == 0.
    Rational to_rational() const {
        if (!is_rational()) throw Error("QuadNum: not a rational value: " + str());
        return x_;
    }

    QuadNum operator-() const { return QuadNum(d_, -x_, -y_); }

    QuadNum operator+(const QuadNum& o) const {
        Integer d = joint_d(o);
        return QuadNum(d, x_ + o.x_, y_ + o.y_);
    }
    QuadNum operator-(const QuadNum& o) const { return *this + (-o); }

    QuadNum operator*(const QuadNum& o) const {
        Integer d = joint_d(o);
        return QuadNum(d, x_ * o.x_ + Rational(d) * y_ * o.y_, x_ * o.y_ + y_ * o.x_);
    }

    QuadNum operator/(const QuadNum& o) const {
        if (o.is_zero()) throw DivisionByZeroError("QuadNum: division by zero");
        Integer d = joint_d(o);
        Rational n = o.x_ * o.x_ - Rational(d) * o.y_ * o.y_;  // norm of o (nonzero: sqrt(d) irrational)
        if (n == 0) throw InternalError("QuadNum: zero norm for nonzero element");
        return *this * QuadNum(d, o.x_ / n, -o.y_ / n);
    }

    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
    QuadNum& operator/=(const QuadNum& o) { return *this = *this / o; }

    /// Galois conjugate x - y*sqrt(D).
    QuadNum conj() const { return QuadNum(d_, x_, -y_); }

    /// Field norm x^2 - D y^2 (a rational).
    Rational norm() const { return x_ * x_ - Rational(d_) * y_ * y_; }

    QuadNum inv() const { return QuadNum(d_, 1, 0) / *this; }

    /// Exact sign of x + y*sqrt(D): -1, 0 or +1.
    int sign() const {
        int sx = x_ == 0 ? 0 : (x_ > 0 ? 1 : -1);
        int sy = y_ == 0 ? 0 : (y_ > 0 ? 1 : -1);
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        // Opposite signs: |x| vs |y| sqrt(D) decided by x^2 vs D y^2.
        Rational lhs = x_ * x_;
        Rational rhs = Rational(d_) * y_ * y_;
        if (lhs == rhs) throw InternalError("QuadNum: sqrt(D) rational?");
        return (lhs > rhs) ? sx : sy;
    }

    bool operator==(const QuadNum& o) const {
        if (is_rational() && o.is_rational()) return x_ == o.x_;
        if (is_rational() != o.is_rational()) return false;
        return d_ == o.d_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const QuadNum& o) const { return !(*this == o); }
    bool operator<(const QuadNum& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadNum& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadNum& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadNum& o) const { return (*this - o).sign() >= 0; }

    /// Exact integer floor.
    Integer floor() const;

    std::string str() const;

private:
    static void check_d(const Integer& d);
    Integer joint_d(const QuadNum& o) const;

    Integer d_;
    Rational x_, y_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadNum& q) { return os << q.str(); }

/// A real quadratic irrationality given by its integer equation
/// alpha t^2 + beta t + gamma = 0 with alpha > 0, gcd(alpha,beta,gamma) = 1
/// and positive non-square discriminant. The associated order is Z[alpha*theta].
struct QuadOrder {
    Integer alpha, beta, gamma;

    QuadOrder(Integer a, Integer b, Integer c);

    Integer discriminant() const { return beta * beta - 4 * alpha * gamma; }

    std::string str() const {
        return "(" + alpha.str() + "," + beta.str() + "," + gamma.str() + ")";
    }
};

/// Root (-beta + sqrt(disc)) / (2 alpha).
QuadNum theta_of(const QuadOrder& order);
/// The other root (-beta - sqrt(disc)) / (2 alpha).
QuadNum theta_conjugate_of(const QuadOrder& order);

/// Fractional-linear action (a theta + b) / (c theta + d) for irrational theta.
QuadNum fractional_linear(const SL2Matrix& g, const QuadNum& theta);

/// Extended action on Q(sqrt(D)) plus the point at infinity (nullopt).
std::optional<QuadNum> fractional_linear_ext(const SL2Matrix& g,
                                             const std::optional<QuadNum>& theta);

/// The two (irrational) fixed points of a trace >= 3 matrix with c != 0:
/// roots of c t^2 + (d - a) t - b = 0. First component has + on the sqrt.
std::pair<QuadNum, QuadNum> fixed_points(const SL2Matrix& g);

/// True iff v.deg - theta * v.rk > 0, decided exactly. Requires theta irrational.
bool halfplane_test(const QuadNum& theta, const KVector& v);

/// Simple continued fraction data for a quadratic irrationality.
/// quotients holds at least `count` partial quotients; the expansion is
/// eventually periodic with quotients[i] = quotients[i + period_length]
/// for all i >= period_start.
struct ContinuedFraction {
    std::vector<Integer> quotients;
    std::size_t period_start = 0;
    std::size_t period_length = 0;

    std::vector<Integer> period() const {
        return {quotients.begin() + static_cast<std::ptrdiff_t>(period_start),
                quotients.begin() + static_cast<std::ptrdiff_t>(period_start + period_length)};
    }
};

ContinuedFraction continued_fraction(const QuadNum& theta, std::size_t count);

/// The largest unit r of Z[alpha*theta] with norm +1 and 0 < r < 1
/// (the inverse of the fundamental norm-1 unit of the order).
QuadNum unit_below_one(const QuadOrder& order);

/// Matrix of multiplication by a norm-1 unit r (0 < r < 1) on Z + Z*theta in
/// the basis (theta, 1): r = c theta + d, r theta = a theta + b.
/// (theta, 1) is then an eigenvector of g with eigenvalue r.
SL2Matrix matrix_of_unit(const QuadOrder& order, const QuadNum& r);

/// Eigen data of a hyperbolic g normalized against a base vector v0:
/// g u = r u, g u' = (1/r) u', u + u' = v0, delta = chi(u, u') extended
/// bilinearly; delta * (1/r - r) = chi(v0, g v0).
struct EigenFrame {
    SL2Matrix g;
    QuadNum r;                     // eigenvalue with 0 < r < 1
    std::array<QuadNum, 2> u;      // (deg, rk) coordinates of the r-eigenvector
    std::array<QuadNum, 2> uprime; // eigenvector for 1/r
    QuadNum delta;

    /// chi extended to Q(sqrt(D))-vectors.
    static QuadNum chi_q(const std::array<QuadNum, 2>& v, const std::array<QuadNum, 2>& w) {
        return v[1] * w[0] - v[0] * w[1];
    }
};

EigenFrame eigen_frame(const SL2Matrix& g, const KVector& v0);

}  // namespace rmtori
