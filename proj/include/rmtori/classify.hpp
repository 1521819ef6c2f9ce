#pragma once

#include "rmtori/lattice.hpp"
#include "rmtori/quadfield.hpp"
#include "rmtori/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmtori {

/// Whether the autoequivalence behind a profile acts trivially on the
/// degree-0/rank-0 part of K-theory. That datum is invisible to (g, v0),
/// so it is an input flag, never computed.
enum class AlphaFlag { Trivial, NontrivialOrUnknown };

inline const char* to_string(AlphaFlag f) {
    return f == AlphaFlag::Trivial ? "trivial" : "nontrivial-or-unknown";
}

enum class VerdictStatus { Holds, Fails, BoundaryConditional };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::Fails: return "fails";
        case VerdictStatus::BoundaryConditional: return "boundary";
    }
    return "?";
}

/// Outcome of a single criterion. Boundary verdicts carry the determinant
/// condition that the K-theory data cannot decide.
struct Verdict {
    VerdictStatus status;
    std::string note;

    static Verdict holds(std::string note = "") { return {VerdictStatus::Holds, std::move(note)}; }
    static Verdict fails(std::string note = "") { return {VerdictStatus::Fails, std::move(note)}; }
    static Verdict boundary(std::string note) {
        return {VerdictStatus::BoundaryConditional, std::move(note)};
    }
};

/// A classified pair (g, v0): all K-theoretic invariants of an
/// (autoequivalence, stable object) pair, with eigen data when hyperbolic.
struct AlgebraProfile {
    SL2Matrix g;
    KVector v0;
    Integer N;  // trace of g
    Integer M;  // chi(v0, g v0)
    AlphaFlag alpha_flag = AlphaFlag::NontrivialOrUnknown;
    EigenClass eigen_class = EigenClass::Other;
    std::optional<EigenFrame> frame;       // present iff hyperbolic and M > 0
    std::optional<QuadNum> theta_attract;  // fixed point on the eigenvalue < 1 side
    std::optional<QuadNum> theta_repel;
    bool base_in_attracting_halfplane = false;

    bool eigenprop_admissible() const {
        return has_positive_real_eigenvalues(eigen_class) && M > 0;
    }
    bool is_hyperbolic() const { return eigen_class == EigenClass::HyperbolicPositive; }
    bool is_unipotent() const { return eigen_class == EigenClass::UnipotentPositive; }

    QRatFun hilbert() const { return hilbert_series(N, M); }
};

/// Builds the profile of (g, v0). Rejects only non-primitive v0; profiles
/// that fail the positivity conditions are constructed and flagged so they
/// can still be explored.
AlgebraProfile profile(const SL2Matrix& g, const KVector& v0,
                       AlphaFlag alpha = AlphaFlag::NontrivialOrUnknown);

// Pure verdict rules as functions of the invariants alone; the profile
// operations below validate admissibility and delegate here.
Verdict rule_degree_one_generated(const Integer& n, const Integer& m);
Verdict rule_quadratic(const Integer& n, const Integer& m, AlphaFlag alpha);
Verdict rule_koszul(const Integer& n, const Integer& m);
Verdict rule_finitely_generated(const Integer& n, const Integer& m);

/// Generation in degree one: holds for M >= N+1; boundary at M = N.
Verdict degree_one_generated(const AlgebraProfile& p);
/// Quadraticity: holds for M >= N+2; at M = N+1 decided by the alpha flag.
Verdict quadratic(const AlgebraProfile& p);
/// Koszulity: holds exactly for M >= N+2.
Verdict koszul(const AlgebraProfile& p);
/// Finite generation: holds exactly for M >= N-1.
Verdict finitely_generated(const AlgebraProfile& p);
/// Ampleness of the orbit sequence in the attracting heart.
Verdict ample(const AlgebraProfile& p);

/// The Koszul dual profile (right twist along v0 composed with g^{-1});
/// postconditions tr = M-N, chi(v0, .) = M and the Hilbert-series duality
/// are verified before returning.
AlgebraProfile koszul_dual(const AlgebraProfile& p);

/// Equivalence report for the positivity lemma: condition (ii) is the exact
/// trace/chi criterion, (i) and (i') are exact scans of chi(v, g^n v).
struct EigenlemReport {
    bool condition_i = false;        // positive for all large n (tail of the scan)
    bool condition_i_prime = false;  // positive for all n in [1, horizon]
    bool condition_ii = false;       // positive real eigenvalues and chi(v, g v) > 0
    std::vector<Integer> scan;       // chi(v, g^n v) for n = 1..horizon
};

EigenlemReport eigenlem_report(const SL2Matrix& g, const KVector& v, std::size_t horizon);

/// Four-way equivalence report for the chi-vs-trace growth criterion.
/// All four booleans must agree; (i)/(ii) are scans against exact closed
/// forms in Q(sqrt(D)), (iii)/(iv) are integer inequalities.
struct VerpropReport {
    bool i = false;    // chi(v, g^n v) - tr(g^n) -> +infinity
    bool ii = false;   // chi(v, g^n v) - tr(g^n) >= 0 for some n in the scan
    bool iii = false;  // M > r1 - r2, i.e. M^2 > N^2 - 4
    bool iv = false;   // unipotent, or M >= N
};

VerpropReport verprop_report(const SL2Matrix& g, const KVector& v, std::size_t horizon = 40);

}  // namespace rmtori
