#pragma once

#include "rmtori/classify.hpp"
#include "rmtori/quadfield.hpp"

#include <vector>

namespace rmtori {

/// One member of an ample sequence for a given theta: a primitive vector
/// (d, r) with prime rank, slope mu = d/r and 1/r <= mu - theta <= 3/r.
struct AmpleSeqItem {
    Integer d;
    Integer r;  // prime
    Rational mu() const { return Rational(d, r); }
    bool theta_gap_ok = true;
};

/// Result of the real-multiplication construction for an order: the unit
/// matrix g fixing theta, the accepted base vector, and its profile.
struct RmPair {
    QuadOrder order;
    QuadNum theta;
    QuadNum unit;  // the norm-1 unit in (0, 1)
    SL2Matrix g;
    KVector v;
    AlgebraProfile prof;
};

/// Builds (g, v, profile) realizing real multiplication by the order's root:
/// g = matrix of the fundamental norm-1 unit below 1, and v the first
/// primitive vector (sup-norm shells, lexicographic within a shell) with
/// v in the attracting half-plane and chi(v, g v) >= tr(g).
/// With koszul_grade the acceptance threshold is raised to tr(g) + 2.
RmPair rm_pair(const QuadOrder& order, bool koszul_grade = false);

/// Emits `count` items with strictly increasing primes r (5, 7, 11, ...):
/// d = least integer >= r*theta + 1, bumped by one if divisible by r.
/// Guarantees gcd(d, r) = 1 and 1/r <= d/r - theta <= 3/r exactly.
std::vector<AmpleSeqItem> ample_sequence(const QuadNum& theta, std::size_t count);

/// The matrix pairing with the opposite algebra: swaps the diagonal.
/// Involutive, trace- and determinant-preserving, same eigenvalue set.
SL2Matrix opposite_matrix(const SL2Matrix& g);

}  // namespace rmtori
