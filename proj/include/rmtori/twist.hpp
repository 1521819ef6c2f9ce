#pragma once

#include "rmtori/classify.hpp"
#include "rmtori/quadfield.hpp"
#include "rmtori/series.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace rmtori {

/// 2x2 matrix with entries in Q(sqrt(D)), exact arithmetic throughout.
struct QuadMatrix {
    std::array<std::array<QuadNum, 2>, 2> e;

    static QuadMatrix identity() {
        QuadMatrix m;
        m.e[0][0] = QuadNum::rational(1);
        m.e[1][1] = QuadNum::rational(1);
        return m;
    }
    static QuadMatrix diag(const QuadNum& a, const QuadNum& b) {
        QuadMatrix m;
        m.e[0][0] = a;
        m.e[1][1] = b;
        return m;
    }

    QuadMatrix operator*(const QuadMatrix& o) const {
        QuadMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.e[i][j] = e[i][0] * o.e[0][j] + e[i][1] * o.e[1][j];
        return r;
    }

    std::array<QuadNum, 2> apply(const std::array<QuadNum, 2>& v) const {
        return {e[0][0] * v[0] + e[0][1] * v[1], e[1][0] * v[0] + e[1][1] * v[1]};
    }

    QuadNum det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }
    QuadNum trace() const { return e[0][0] + e[1][1]; }

    QuadMatrix inverse() const {
        QuadNum d = det();
        if (d.is_zero()) throw DivisionByZeroError("QuadMatrix: singular");
        QuadMatrix r;
        r.e[0][0] = e[1][1] / d;
        r.e[0][1] = -e[0][1] / d;
        r.e[1][0] = -e[1][0] / d;
        r.e[1][1] = e[0][0] / d;
        return r;
    }

    bool operator==(const QuadMatrix& o) const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (e[i][j] != o.e[i][j]) return false;
        return true;
    }
    bool operator!=(const QuadMatrix& o) const { return !(*this == o); }
};

/// Pairing table and rank sequence of the iterated right-twist orbit.
/// chi(n, m) is defined for 0 <= n < m <= horizon; rk[n] for n <= horizon.
/// Both are verified against the closed-form generating series on build.
struct TwistOrbit {
    AlgebraProfile profile;
    std::size_t horizon = 0;
    std::vector<std::vector<Integer>> chi_table;  // chi_table[n][m]
    std::vector<QuadNum> rk_seq;

    const Integer& chi_at(std::size_t n, std::size_t m) const { return chi_table[n][m]; }
};

TwistOrbit twist_orbit(const AlgebraProfile& p, std::size_t horizon);

/// Dimensions 1, chi(0,1), chi(1,2), ... of the graded pieces of the Koszul
/// dual; equal to the coefficients of the dual Hilbert series.
std::vector<Integer> koszul_dual_dims(const AlgebraProfile& p, std::size_t horizon);

/// Matrix of the shifted left twist along the (-i)-th orbit object in the
/// eigenbasis (u, u'): conjugate of h_0 = [[1+D, -D],[D, 1-D]] by diag(r^-i, r^i).
QuadMatrix h_matrix(const AlgebraProfile& p, std::size_t i);

/// S = diag(r, 1/r) h_0; det S = 1 and tr S = N - M, verified on return.
QuadMatrix s_matrix(const AlgebraProfile& p);

/// At the boundary N - M = 1 the S-matrix satisfies S^3 = -I.
bool s_cube_check(const AlgebraProfile& p);

/// One point of a twist trajectory, in eigenbasis coordinates v = cu*u + cup*u'.
struct TrajectoryStep {
    QuadNum coord_u;
    QuadNum coord_uprime;
    bool in_halfplane;  // chi(u, v) > 0
};

/// Applies h_0, then h_{-1}, h_{-2}, ... to v (expressed in the eigenbasis)
/// and flags membership in the half-plane {chi(u, .) > 0} at every step.
/// Entry 0 is v itself; `steps` applications follow.
std::vector<TrajectoryStep> trajectory(const AlgebraProfile& p, const KVector& v,
                                       std::size_t steps);

/// Translates a half-plane vector along the orbit: the minimal k >= 0 with
/// chi(v0, g^k v) > 0, together with g^k v. Always terminates for v in the
/// attracting half-plane of an admissible hyperbolic profile.
std::pair<std::size_t, KVector> translate_into_pairing_range(const AlgebraProfile& p,
                                                             const KVector& v);

/// Strictly descending chain of proper quotients witnessing non-Noetherianity:
/// starting from a primitive v with deg - rk*theta > 0, each step solves
/// m*rk - n*deg = 1 with 0 < m - n*theta < deg - rk*theta.
/// Consecutive vectors pair to chi = 1 and the positive values strictly decrease.
std::vector<KVector> descent_chain(const QuadNum& theta, const KVector& v, std::size_t steps);

}  // namespace rmtori
