#pragma once

#include "rmtori/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rmtori::oracle {

/// Compares three independent computations of the pairing sequence
/// chi(v, g^n v): the closed-form series M t / (1 - N t + t^2) expanded by
/// long division, the bare recurrence a_n = N a_{n-1} - a_{n-2}, and (when
/// a realizing pair (g, v) exists within the search bound) explicit matrix
/// powers. Returns true iff all available routes agree up to the horizon.
bool series_vs_recurrence(const Integer& n, const Integer& m, std::size_t horizon);

/// Expands both sides of (u + t) F(t, u) = H(u)(1 + t F0(t)) - 1 to the
/// given total order and compares exactly; also checks R(t)(1 + t) = H(-rt)^{-1}
/// over Q(sqrt(D)) with r the eigenvalue below one (r = 1 when N = 2).
bool bivariate_identity_check(const Integer& n, const Integer& m, std::size_t order);

struct EigenlemViolation {
    Integer a, b, c, d;
    Integer vdeg, vrk;
    std::string detail;
};

/// Enumerates every determinant-1 matrix with entries bounded by entry_bound
/// and every nonzero vector with coordinates bounded by vec_bound, and checks
/// that the exact eigenvalue/chi criterion agrees with the positivity scan of
/// chi(v, g^n v) for n in [1, horizon]. Returns all disagreements (none).
std::vector<EigenlemViolation> exhaustive_eigenlem(long entry_bound, long vec_bound,
                                                   std::size_t horizon);

/// Recomputes the Koszul dual matrix of sampled Koszul-grade profiles by
/// explicit 2x2 arithmetic and checks tr = M - N, chi(v0, g! v0) = M, and
/// that the dual dimension sequence matches the dual Hilbert series to
/// horizon 20. `samples` pseudorandom orders are drawn deterministically.
bool dual_matrix_check(std::size_t samples);

struct SuiteReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::size_t checks_run = 0;

    void record(bool passed, const std::string& what) {
        ++checks_run;
        if (!passed) {
            ok = false;
            failures.push_back(what);
        }
    }
};

/// Runs every oracle suite at its documented input range.
SuiteReport run_all(long entry_bound = 3);

}  // namespace rmtori::oracle
