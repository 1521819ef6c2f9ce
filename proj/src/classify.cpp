#include "rmtori/classify.hpp"

#include "rmtori/errors.hpp"

namespace rmtori {

namespace {

const char* kDegreeOneBoundaryNote =
    "undecidable at K-theory level: generated in degree one iff "
    "det F^2(F0) is not isomorphic to (det F(F0))^N (x) det(F0)^-1";

const char* kQuadraticBoundaryNote =
    "undecidable at K-theory level: quadratic iff det F^3(F0) is not isomorphic to "
    "(det F^2(F0))^(N+1) (x) (det F(F0))^(-N-1) (x) det(F0)";

void require_admissible(const AlgebraProfile& p, const char* op) {
    if (!p.eigenprop_admissible())
        throw NotAdmissibleError(std::string(op) +
                                 ": profile is not admissible (needs positive real "
                                 "eigenvalues and M > 0; N = " +
                                 p.N.str() + ", M = " + p.M.str() + ")");
}

}  // namespace

AlgebraProfile profile(const SL2Matrix& g, const KVector& v0, AlphaFlag alpha) {
    if (!is_primitive(v0))
        throw NonPrimitiveBaseError("profile: base vector " + v0.str() + " is not primitive");
    AlgebraProfile p;
    p.g = g;
    p.v0 = v0;
    p.N = trace(g);
    p.M = chi(v0, act(g, v0));
    p.alpha_flag = alpha;
    p.eigen_class = classify_eigen(g);
    if (p.eigen_class == EigenClass::HyperbolicPositive && p.M > 0) {
        EigenFrame fr = eigen_frame(g, v0);
        // Fixed points as ratios deg/rk of the eigenvectors. A hyperbolic
        // integer matrix always has c != 0, so the rank components are nonzero.
        p.theta_attract = fr.u[0] / fr.u[1];
        p.theta_repel = fr.uprime[0] / fr.uprime[1];
        p.base_in_attracting_halfplane = halfplane_test(*p.theta_attract, v0);
        p.frame = std::move(fr);
    }
    return p;
}

Verdict rule_degree_one_generated(const Integer& n, const Integer& m) {
    if (m >= n + 1) return Verdict::holds();
    if (m == n) return Verdict::boundary(kDegreeOneBoundaryNote);
    return Verdict::fails("M < N forces the degree-one multiplication map to miss A_2");
}

Verdict rule_quadratic(const Integer& n, const Integer& m, AlphaFlag alpha) {
    if (m >= n + 2) return Verdict::holds();
    if (m == n + 1) {
        if (alpha == AlphaFlag::Trivial)
            return Verdict::fails("M = N+1 with trivial alpha requires a cubic relation");
        return Verdict::boundary(kQuadraticBoundaryNote);
    }
    return Verdict::fails();
}

Verdict rule_koszul(const Integer& n, const Integer& m) {
    return m >= n + 2 ? Verdict::holds() : Verdict::fails();
}

Verdict rule_finitely_generated(const Integer& n, const Integer& m) {
    return m >= n - 1 ? Verdict::holds() : Verdict::fails();
}

Verdict degree_one_generated(const AlgebraProfile& p) {
    require_admissible(p, "degree_one_generated");
    return rule_degree_one_generated(p.N, p.M);
}

Verdict quadratic(const AlgebraProfile& p) {
    require_admissible(p, "quadratic");
    return rule_quadratic(p.N, p.M, p.alpha_flag);
}

Verdict koszul(const AlgebraProfile& p) {
    require_admissible(p, "koszul");
    return rule_koszul(p.N, p.M);
}

Verdict finitely_generated(const AlgebraProfile& p) {
    require_admissible(p, "finitely_generated");
    return rule_finitely_generated(p.N, p.M);
}

Verdict ample(const AlgebraProfile& p) {
    require_admissible(p, "ample");
    if (p.is_unipotent()) {
        // M >= 1 is guaranteed by admissibility; these orbits degenerate to
        // twists by a positive-degree line bundle, which are ample.
        return Verdict::holds("unipotent case: line-bundle-twist orbit");
    }
    if (!p.frame.has_value())
        throw NotAdmissibleError("ample: hyperbolic profile without an eigen frame");
    if (!p.base_in_attracting_halfplane)
        throw NotAdmissibleError(
            "ample: base vector lies outside the attracting half-plane (shifted heart)");
    if (p.M >= p.N - 1) return Verdict::holds();
    return Verdict::fails("0 < M < N-1: the orbit algebra is not finitely generated");
}

AlgebraProfile koszul_dual(const AlgebraProfile& p) {
    if (koszul(p).status != VerdictStatus::Holds)
        throw NotKoszulError("koszul_dual: profile is not Koszul (M < N+2)");
    SL2Matrix g_dual = compose(right_twist_matrix(p.v0), inverse(p.g));
    // The twist component acts nontrivially on degree-0/rank-0 classes, so
    // the dual's alpha datum is unknown regardless of the input flag.
    AlgebraProfile dual = profile(g_dual, p.v0, AlphaFlag::NontrivialOrUnknown);
    if (dual.N != p.M - p.N)
        throw InternalError("koszul_dual: tr(g!) != M - N");
    if (dual.M != p.M)
        throw InternalError("koszul_dual: chi(v0, g! v0) != M");
    if (dual.hilbert() != dual_series(p.hilbert()))
        throw InternalError("koszul_dual: Hilbert series of the dual is not the dual series");
    return dual;
}

EigenlemReport eigenlem_report(const SL2Matrix& g, const KVector& v, std::size_t horizon) {
    if (v.is_zero()) throw PreconditionViolatedError("eigenlem_report: v must be nonzero");
    EigenlemReport rep;
    rep.condition_ii =
        has_positive_real_eigenvalues(classify_eigen(g)) && chi(v, act(g, v)) > 0;
    rep.scan.reserve(horizon);
    KVector w = v;
    for (std::size_t i = 1; i <= horizon; ++i) {
        w = act(g, w);
        rep.scan.push_back(chi(v, w));
    }
    rep.condition_i_prime = true;
    for (const Integer& x : rep.scan)
        if (x <= 0) rep.condition_i_prime = false;
    // "All sufficiently large n" probed on the tail half of the scan. Sign
    // patterns of the failing cases repeat with period <= 6, so any tail of
    // length >= 3 is decisive; horizons >= 6 are reliable.
    rep.condition_i = !rep.scan.empty();
    for (std::size_t i = horizon / 2; i < rep.scan.size(); ++i)
        if (rep.scan[i] <= 0) rep.condition_i = false;
    return rep;
}

VerpropReport verprop_report(const SL2Matrix& g, const KVector& v, std::size_t horizon) {
    EigenClass cls = classify_eigen(g);
    if (cls != EigenClass::UnipotentPositive && cls != EigenClass::HyperbolicPositive)
        throw PreconditionViolatedError(
            "verprop_report: matrix must be unipotent or hyperbolic with positive eigenvalues");
    Integer m = chi(v, act(g, v));
    if (m <= 0) throw PreconditionViolatedError("verprop_report: chi(v, g v) must be positive");
    if (horizon < 6) throw PreconditionViolatedError("verprop_report: horizon must be >= 6");

    Integer n = trace(g);
    VerpropReport rep;
    rep.iii = cls == EigenClass::UnipotentPositive ? true : (m * m > n * n - 4);
    rep.iv = cls == EigenClass::UnipotentPositive || m >= n;

    // Exact scan of d_n = chi(v, g^n v) - tr(g^n), computed from the closed
    // forms in Q(sqrt(D)) and cross-checked against integer matrix powers.
    std::vector<QuadNum> diffs;
    diffs.reserve(horizon);
    if (cls == EigenClass::UnipotentPositive) {
        for (std::size_t k = 1; k <= horizon; ++k)
            diffs.push_back(QuadNum::integer(Integer(k) * m - 2));
    } else {
        auto [f, d] = squarefree_decompose(n * n - 4);
        QuadNum r(d, Rational(n) / 2, Rational(-f) / 2);
        QuadNum rinv(d, Rational(n) / 2, Rational(f) / 2);
        QuadNum spread = (r - rinv).inv();
        QuadNum mq = QuadNum::integer(m, d);
        QuadNum rn = r, rinvn = rinv;
        for (std::size_t k = 1; k <= horizon; ++k) {
            QuadNum chi_n = mq * (rn - rinvn) * spread;
            QuadNum tr_n = rn + rinvn;
            diffs.push_back(chi_n - tr_n);
            rn = rn * r;
            rinvn = rinvn * rinv;
        }
    }
    KVector w = v;
    SL2Matrix gp = SL2Matrix::identity();
    for (std::size_t k = 1; k <= horizon; ++k) {
        w = act(g, w);
        gp = compose(gp, g);
        QuadNum expected = QuadNum::integer(chi(v, w) - trace(gp));
        if (diffs[k - 1] != expected)
            throw InternalError("verprop_report: closed form disagrees with matrix powers");
    }

    for (const QuadNum& dv : diffs)
        if (dv.sign() >= 0) rep.ii = true;
    // (i): the tail must be positive and strictly increasing.
    rep.i = true;
    for (std::size_t k = diffs.size() - 3; k < diffs.size(); ++k)
        if (diffs[k].sign() <= 0) rep.i = false;
    if (rep.i) {
        if (!(diffs[diffs.size() - 1] > diffs[diffs.size() - 2]) ||
            !(diffs[diffs.size() - 2] > diffs[diffs.size() - 3]))
            rep.i = false;
    }
    return rep;
}

}  // namespace rmtori
