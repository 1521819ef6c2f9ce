#pragma once

#include "rmtori/errors.hpp"
#include "rmtori/numeric.hpp"

#include <ostream>
#include <string>

namespace rmtori {

/// A K-theory class of a sheaf-like object: the pair (degree, rank).
/// Vectors are columns; matrices act on the left.
struct KVector {
    Integer deg;
    Integer rk;

    KVector() : deg(0), rk(0) {}
    KVector(Integer d, Integer r) : deg(std::move(d)), rk(std::move(r)) {}

    bool operator==(const KVector& o) const { return deg == o.deg && rk == o.rk; }
    bool operator!=(const KVector& o) const { return !(*this == o); }

    KVector operator+(const KVector& o) const { return {deg + o.deg, rk + o.rk}; }
    KVector operator-(const KVector& o) const { return {deg - o.deg, rk - o.rk}; }
    KVector operator-() const { return {-deg, -rk}; }
    KVector operator*(const Integer& s) const { return {deg * s, rk * s}; }

    bool is_zero() const { return deg == 0 && rk == 0; }

    std::string str() const { return "(" + deg.str() + "," + rk.str() + ")"; }
};

inline bool is_primitive(const KVector& v) {
    return int_gcd(int_abs(v.deg), int_abs(v.rk)) == 1;
}

/// Integer 2x2 matrix of determinant 1. Construction enforces the determinant.
struct SL2Matrix {
    Integer a, b, c, d;

    SL2Matrix() : a(1), b(0), c(0), d(1) {}

    SL2Matrix(Integer a_, Integer b_, Integer c_, Integer d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1)
            throw NotUnimodularError("SL2Matrix: determinant must be 1, got (" +
                                     Integer(a * d - b * c).str() + ")");
    }

    static SL2Matrix identity() { return SL2Matrix(); }

    bool operator==(const SL2Matrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const SL2Matrix& o) const { return !(*this == o); }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    std::string str() const {
        return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
    }
};

inline std::ostream& operator<<(std::ostream& os, const KVector& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const SL2Matrix& g) { return os << g.str(); }

/// Euler form chi(v, w) = -det(v, w) = v.rk * w.deg - v.deg * w.rk.
/// Bilinear, antisymmetric; chi((0,1),(d,1)) = d.
inline Integer chi(const KVector& v, const KVector& w) {
    return v.rk * w.deg - v.deg * w.rk;
}

/// Column action (deg, rk) |-> (a deg + b rk, c deg + d rk). Preserves chi.
inline KVector act(const SL2Matrix& g, const KVector& v) {
    return {g.a * v.deg + g.b * v.rk, g.c * v.deg + g.d * v.rk};
}

inline SL2Matrix compose(const SL2Matrix& g, const SL2Matrix& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
            g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

inline SL2Matrix inverse(const SL2Matrix& g) { return {g.d, -g.b, -g.c, g.a}; }

inline Integer trace(const SL2Matrix& g) { return g.a + g.d; }

inline SL2Matrix matrix_power(const SL2Matrix& g, long long n) {
    SL2Matrix base = n >= 0 ? g : inverse(g);
    unsigned long long k = n >= 0 ? static_cast<unsigned long long>(n)
                                  : static_cast<unsigned long long>(-n);
    SL2Matrix acc = SL2Matrix::identity();
    while (k > 0) {
        if (k & 1ULL) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1ULL;
    }
    return acc;
}

enum class EigenClass {
    Identity,            // g == I
    UnipotentPositive,   // tr == 2, g != I (eigenvalues 1, 1)
    HyperbolicPositive,  // tr >= 3 (eigenvalues r > 1 > 1/r > 0)
    Other,               // tr <= 1 (eigenvalues not both real positive)
};

inline const char* to_string(EigenClass c) {
    switch (c) {
        case EigenClass::Identity: return "identity";
        case EigenClass::UnipotentPositive: return "unipotent-positive";
        case EigenClass::HyperbolicPositive: return "hyperbolic-positive";
        case EigenClass::Other: return "other";
    }
    return "?";
}

/// Determinant 1 makes the trace decide everything.
inline EigenClass classify_eigen(const SL2Matrix& g) {
    Integer t = trace(g);
    if (t >= 3) return EigenClass::HyperbolicPositive;
    if (t == 2) return g.is_identity() ? EigenClass::Identity : EigenClass::UnipotentPositive;
    return EigenClass::Other;
}

inline bool has_positive_real_eigenvalues(EigenClass c) {
    return c == EigenClass::Identity || c == EigenClass::UnipotentPositive ||
           c == EigenClass::HyperbolicPositive;
}

/// Checks the cubic matrix identity g^3 - (N+1) g^2 + (N+1) g - I = 0 with
/// N = tr(g). Holds for all of SL2(Z): (g^2 - Ng + I)(g - I) = 0.
inline bool cube_identity_check(const SL2Matrix& g) {
    Integer n1 = trace(g) + 1;
    SL2Matrix g2 = compose(g, g);
    SL2Matrix g3 = compose(g2, g);
    Integer a = g3.a - n1 * g2.a + n1 * g.a - 1;
    Integer b = g3.b - n1 * g2.b + n1 * g.b;
    Integer c = g3.c - n1 * g2.c + n1 * g.c;
    Integer d = g3.d - n1 * g2.d + n1 * g.d - 1;
    return a == 0 && b == 0 && c == 0 && d == 0;
}

/// Matrix of v |-> v - chi(v0, v) v0, the K-theory action of the shifted
/// left twist along a stable object with class v0. Fixes v0, det = 1.
inline SL2Matrix left_twist_matrix(const KVector& v0) {
    if (!is_primitive(v0))
        throw NotPrimitiveError("left_twist_matrix: base vector " + v0.str() +
                                " is not primitive");
    const Integer& p = v0.deg;
    const Integer& q = v0.rk;
    return {1 - p * q, p * p, -q * q, 1 + p * q};
}

/// Matrix of v |-> chi(v, v0) v0 - v, the K-theory action of the right twist
/// along v0. Sends v0 to -v0, det = 1. Inverse of minus the left twist.
inline SL2Matrix right_twist_matrix(const KVector& v0) {
    if (!is_primitive(v0))
        throw NotPrimitiveError("right_twist_matrix: base vector " + v0.str() +
                                " is not primitive");
    const Integer& p = v0.deg;
    const Integer& q = v0.rk;
    return {-p * q - 1, p * p, -q * q, p * q - 1};
}

}  // namespace rmtori
