#include "rmtori/twist.hpp"

#include "rmtori/errors.hpp"

namespace rmtori {

namespace {

void require_frame(const AlgebraProfile& p, const char* op) {
    if (!p.frame.has_value())
        throw NoFrameError(std::string(op) + ": profile has no eigen frame (not hyperbolic "
                                             "with M > 0)");
}

/// Eigenvalue entering the rank recurrence: the frame's r when hyperbolic,
/// 1 in the unipotent case (where r + 1/r = N = 2 degenerates).
QuadNum orbit_eigenvalue(const AlgebraProfile& p) {
    if (p.frame.has_value()) return p.frame->r;
    return QuadNum::rational(1);
}

}  // namespace

TwistOrbit twist_orbit(const AlgebraProfile& p, std::size_t horizon) {
    if (!p.eigenprop_admissible())
        throw NotAdmissibleError("twist_orbit: profile is not admissible");
    if (horizon < 1) throw PreconditionViolatedError("twist_orbit: horizon must be >= 1");

    TwistOrbit orbit;
    orbit.profile = p;
    orbit.horizon = horizon;

    // Hilbert coefficients a_m = chi(v0, g^m v0): a_0 = 0, a_1 = M,
    // a_m = N a_{m-1} - a_{m-2}.
    std::vector<Integer> a(horizon + 1, 0);
    if (horizon >= 1) a[1] = p.M;
    for (std::size_t m = 2; m <= horizon; ++m) a[m] = p.N * a[m - 1] - a[m - 2];

    orbit.chi_table.assign(horizon + 1, std::vector<Integer>(horizon + 1, 0));
    for (std::size_t m = 1; m <= horizon; ++m) orbit.chi_table[0][m] = a[m];
    for (std::size_t n = 1; n < horizon; ++n)
        for (std::size_t m = n + 1; m <= horizon; ++m)
            orbit.chi_table[n][m] =
                orbit.chi_table[n - 1][n] * a[m - n] - orbit.chi_table[n - 1][m];

    QuadNum r = orbit_eigenvalue(p);
    orbit.rk_seq.assign(horizon + 1, QuadNum());
    orbit.rk_seq[0] = QuadNum::rational(1, r.D());
    QuadNum rn = QuadNum::rational(1, r.D());
    for (std::size_t n = 1; n <= horizon; ++n) {
        rn = rn * r;
        orbit.rk_seq[n] =
            QuadNum::integer(orbit.chi_table[n - 1][n], r.D()) * rn - orbit.rk_seq[n - 1];
    }

    // Cross-check against the generating series, exact equality required.
    BiRationalFunction f = twist_series_F(p.N, p.M);
    auto fc = f.coefficients(horizon, horizon);
    for (std::size_t n = 0; n < horizon; ++n)
        for (std::size_t k = 0; n + k + 1 <= horizon; ++k)
            if (Rational(orbit.chi_table[n][n + k + 1]) != fc[n][k])
                throw InternalError("twist_orbit: chi table disagrees with F(t,u)");
    QuadRatFun rser = twist_series_R(p.N, p.M, r);
    auto rc = rser.coefficients(horizon);
    for (std::size_t n = 0; n <= horizon; ++n)
        if (orbit.rk_seq[n] != rc[n])
            throw InternalError("twist_orbit: rank sequence disagrees with R(t)");
    return orbit;
}

std::vector<Integer> koszul_dual_dims(const AlgebraProfile& p, std::size_t horizon) {
    if (rule_koszul(p.N, p.M).status != VerdictStatus::Holds || !p.eigenprop_admissible())
        throw NotKoszulError("koszul_dual_dims: profile is not Koszul");
    std::vector<Integer> dims;
    dims.reserve(horizon + 1);
    dims.emplace_back(1);
    if (horizon >= 1) {
        TwistOrbit orbit = twist_orbit(p, horizon);
        for (std::size_t n = 1; n <= horizon; ++n) dims.push_back(orbit.chi_table[n - 1][n]);
    }
    auto dual_coeffs = dual_series(p.hilbert()).coefficients(horizon);
    for (std::size_t n = 0; n <= horizon; ++n)
        if (Rational(dims[n]) != dual_coeffs[n])
            throw InternalError("koszul_dual_dims: dims disagree with the dual series");
    return dims;
}

QuadMatrix h_matrix(const AlgebraProfile& p, std::size_t i) {
    require_frame(p, "h_matrix");
    const EigenFrame& fr = *p.frame;
    QuadNum one = QuadNum::rational(1, fr.delta.D());
    QuadMatrix h0;
    h0.e[0][0] = one + fr.delta;
    h0.e[0][1] = -fr.delta;
    h0.e[1][0] = fr.delta;
    h0.e[1][1] = one - fr.delta;
    if (i == 0) return h0;
    QuadNum rpow = one;
    for (std::size_t k = 0; k < i; ++k) rpow = rpow * fr.r;
    QuadMatrix left = QuadMatrix::diag(rpow.inv(), rpow);
    QuadMatrix right = QuadMatrix::diag(rpow, rpow.inv());
    return left * h0 * right;
}

QuadMatrix s_matrix(const AlgebraProfile& p) {
    require_frame(p, "s_matrix");
    const EigenFrame& fr = *p.frame;
    QuadMatrix s = QuadMatrix::diag(fr.r, fr.r.inv()) * h_matrix(p, 0);
    QuadNum one = QuadNum::rational(1, fr.delta.D());
    if (s.det() != one) throw InternalError("s_matrix: det(S) != 1");
    if (s.trace() != QuadNum::integer(p.N - p.M, fr.delta.D()))
        throw InternalError("s_matrix: tr(S) != N - M");
    return s;
}

bool s_cube_check(const AlgebraProfile& p) {
    require_frame(p, "s_cube_check");
    if (p.N - p.M != 1)
        throw WrongBoundaryError("s_cube_check: requires N - M = 1, got N - M = " +
                                 Integer(p.N - p.M).str());
    QuadMatrix s = s_matrix(p);
    QuadMatrix s3 = s * s * s;
    QuadNum mone = QuadNum::rational(-1, p.frame->delta.D());
    QuadNum zero = QuadNum::rational(0, p.frame->delta.D());
    return s3.e[0][0] == mone && s3.e[1][1] == mone && s3.e[0][1] == zero &&
           s3.e[1][0] == zero;
}

std::vector<TrajectoryStep> trajectory(const AlgebraProfile& p, const KVector& v,
                                       std::size_t steps) {
    require_frame(p, "trajectory");
    const EigenFrame& fr = *p.frame;
    // Coordinates of v in the eigenbasis: v = cu*u + cup*u' with
    // cu = chi(v, u')/delta and cup = chi(u, v)/delta.
    std::array<QuadNum, 2> vq{QuadNum::integer(v.deg, fr.delta.D()),
                              QuadNum::integer(v.rk, fr.delta.D())};
    QuadNum cu = EigenFrame::chi_q(vq, fr.uprime) / fr.delta;
    QuadNum cup = EigenFrame::chi_q(fr.u, vq) / fr.delta;

    auto membership = [&](const std::array<QuadNum, 2>& w) {
        // chi(u, w) = (u'-coordinate of w) * delta.
        return (w[1] * fr.delta).sign() > 0;
    };

    std::vector<TrajectoryStep> out;
    out.reserve(steps + 1);
    std::array<QuadNum, 2> w{cu, cup};
    out.push_back({w[0], w[1], membership(w)});
    for (std::size_t i = 0; i < steps; ++i) {
        w = h_matrix(p, i).apply(w);
        out.push_back({w[0], w[1], membership(w)});
    }
    return out;
}

std::pair<std::size_t, KVector> translate_into_pairing_range(const AlgebraProfile& p,
                                                             const KVector& v) {
    require_frame(p, "translate_into_pairing_range");
    if (v.is_zero())
        throw PreconditionViolatedError("translate_into_pairing_range: v must be nonzero");
    const EigenFrame& fr = *p.frame;
    std::array<QuadNum, 2> vq{QuadNum::integer(v.deg, fr.delta.D()),
                              QuadNum::integer(v.rk, fr.delta.D())};
    if ((EigenFrame::chi_q(fr.u, vq) * fr.delta).sign() <= 0)
        throw NotInHalfplaneError(
            "translate_into_pairing_range: v is outside the attracting half-plane");
    KVector w = v;
    for (std::size_t k = 0;; ++k) {
        if (chi(p.v0, w) > 0) return {k, w};
        w = act(p.g, w);
    }
}

std::vector<KVector> descent_chain(const QuadNum& theta, const KVector& v, std::size_t steps) {
    if (theta.is_rational())
        throw RationalThetaError("descent_chain: theta must be irrational");
    if (!is_primitive(v)) throw NotPrimitiveError("descent_chain: vector is not primitive");
    if (!halfplane_test(theta, v))
        throw NotInHalfplaneError("descent_chain: vector " + v.str() +
                                  " has deg - rk*theta <= 0");

    auto value_of = [&theta](const KVector& w) {
        return QuadNum::integer(w.deg, theta.D()) - theta * QuadNum::integer(w.rk, theta.D());
    };

    std::vector<KVector> chain;
    chain.reserve(steps);
    KVector cur = v;
    QuadNum cur_value = value_of(cur);
    for (std::size_t i = 0; i < steps; ++i) {
        // Base solution of m*rk - n*deg = 1 via the extended Euclidean
        // algorithm; the solution set is (m0, n0) + t (deg, rk).
        Integer s, t;
        {
            // extended gcd of (rk, -deg)
            Integer old_r = cur.rk, r = -cur.deg;
            Integer old_s = 1, s1 = 0;
            Integer old_t = 0, t1 = 1;
            while (r != 0) {
                Integer q = old_r / r;
                Integer tmp = old_r - q * r;
                old_r = r;
                r = tmp;
                tmp = old_s - q * s1;
                old_s = s1;
                s1 = tmp;
                tmp = old_t - q * t1;
                old_t = t1;
                t1 = tmp;
            }
            // old_r = gcd(rk, -deg) * sign; normalize to m*rk - n*deg = 1.
            if (old_r == 1) {
                s = old_s;
                t = old_t;
            } else if (old_r == -1) {
                s = -old_s;
                t = -old_t;
            } else {
                throw InternalError("descent_chain: vector not primitive after all");
            }
        }
        KVector base(s, t);  // m = s, n = t: s*rk + t*(-deg) = 1
        // Translate by multiples of cur so that 0 < m - n*theta < cur_value.
        QuadNum base_value = value_of(base);
        QuadNum ratio = base_value / cur_value;
        Integer shift = ratio.floor();
        KVector next = base - cur * shift;
        QuadNum next_value = value_of(next);
        if (!(next_value.sign() > 0) || !(next_value < cur_value))
            throw InternalError("descent_chain: translate missed the interval");
        if (chi(cur, next) != 1) throw InternalError("descent_chain: chi(prev, next) != 1");
        if (!is_primitive(next)) throw InternalError("descent_chain: non-primitive output");
        chain.push_back(next);
        cur = next;
        cur_value = next_value;
    }
    return chain;
}

}  // namespace rmtori
