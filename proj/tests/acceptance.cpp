// Acceptance suite: every criterion is exact arithmetic (zero tolerance)
// and prints one pass/fail line. Nonzero exit iff any criterion fails.

#include "rmtori/classify.hpp"
#include "rmtori/construct.hpp"
#include "rmtori/oracle.hpp"
#include "rmtori/series.hpp"
#include "rmtori/twist.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace rmtori;

namespace {

struct Criterion {
    std::string name;
    std::function<void()> run;  // throws std::runtime_error on failure
};

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

// ---------------------------------------------------------------- criterion 1

void commutative_sanity() {
    for (long d = 1; d <= 10; ++d) {
        AlgebraProfile p = profile(SL2Matrix(1, d, 0, 1), KVector(0, 1), AlphaFlag::Trivial);
        auto coeffs = p.hilbert().coefficients(20);
        require(coeffs[0] == 1, "constant coefficient != 1");
        for (std::size_t k = 1; k <= 20; ++k)
            require(coeffs[k] == Rational(d) * Rational(k),
                    "coefficient " + std::to_string(k) + " != " + std::to_string(d * k));
        bool quad_holds = quadratic(p).status == VerdictStatus::Holds;
        bool kos_holds = koszul(p).status == VerdictStatus::Holds;
        require(quad_holds == (d >= 4), "quadratic verdict does not flip at d = 4");
        require(kos_holds == (d >= 4), "koszul verdict does not flip at d = 4");
    }
}

// ---------------------------------------------------------------- criterion 2

// Complete realizability test and witness for tr g = N, chi(v0, g v0) = M > 0
// with primitive v0. Any realization can be moved by a basis change to
// v0 = (1, 0), where the pairing form has leading coefficient M; that exists
// iff B^2 = N^2 - 4 (mod 4M) is solvable with B = N (mod 2). Then
// g = [[(N+B)/2, (B^2-N^2+4)/(4M)], [-M, (N-B)/2]] has det 1 by construction.
std::optional<std::pair<SL2Matrix, KVector>> find_profile(long n, long m) {
    for (long bb = 0; bb < 2 * m; ++bb) {
        if ((bb - n) % 2 != 0) continue;
        long rhs = bb * bb - (n * n - 4);
        if (rhs % (4 * m) != 0) continue;
        return std::make_pair(
            SL2Matrix((n + bb) / 2, rhs / (4 * m), -m, (n - bb) / 2), KVector(1, 0));
    }
    return std::nullopt;
}

void hilblem_identity() {
    std::size_t realized = 0, skipped = 0;
    for (long n = 2; n <= 10; ++n) {
        for (long m = 1; m <= 15; ++m) {
            // The proof identity as an exact rational-function identity.
            require(oracle::bivariate_identity_check(n, m, 10),
                    "bivariate identity failed at N=" + std::to_string(n) +
                        " M=" + std::to_string(m));
            auto witness = find_profile(n, m);
            if (!witness) {
                ++skipped;  // no realizing profile (quadratic-form obstruction)
                continue;
            }
            ++realized;
            AlgebraProfile p = profile(witness->first, witness->second);
            require(p.N == n && p.M == m, "witness invariants wrong");
            TwistOrbit orbit = twist_orbit(p, 10);
            auto fc = twist_series_F(n, m).coefficients(10, 10);
            for (std::size_t i = 0; i < 10; ++i)
                for (std::size_t k = 0; i + k + 1 <= 10; ++k)
                    require(Rational(orbit.chi_at(i, i + k + 1)) == fc[i][k],
                            "chi table vs F(t,u) mismatch");
            QuadNum r = p.frame ? p.frame->r : QuadNum::rational(1);
            auto rc = twist_series_R(n, m, r).coefficients(10);
            for (std::size_t i = 0; i <= 10; ++i)
                require(orbit.rk_seq[i] == rc[i], "rank sequence vs R(t) mismatch");
        }
    }
    // Exactly 65 of the 135 pairs admit a profile; the rest fail the
    // congruence B^2 = N^2 - 4 (mod 4M), which is a complete obstruction.
    require(realized == 65, "realized (N, M) pair count drifted: " + std::to_string(realized));
    std::cout << "    [criterion 2: " << realized << " pairs realized, " << skipped
              << " skipped for non-representability]\n";
}

// ---------------------------------------------------------------- criterion 3

std::vector<RmPair> sample_koszul_pairs(std::size_t want) {
    SplitMix64 rng(0xACCE97ULL);
    std::vector<RmPair> out;
    while (out.size() < want) {
        Integer alpha(rng.range(1, 4));
        Integer beta(rng.range(-6, 6));
        Integer gamma(rng.range(-9, -1));
        Integer disc = beta * beta - 4 * alpha * gamma;
        if (disc <= 0 || is_perfect_square(disc)) continue;
        if (int_gcd(int_gcd(int_abs(alpha), int_abs(beta)), int_abs(gamma)) != 1) continue;
        out.push_back(rm_pair(QuadOrder(alpha, beta, gamma), /*koszul_grade=*/true));
    }
    return out;
}

void koszul_duality() {
    AlgebraProfile p = profile(SL2Matrix(3, -4, -2, 3), KVector(3, 1));
    AlgebraProfile dual = koszul_dual(p);
    require(dual.g == SL2Matrix(6, 11, 1, 2), "worked dual matrix mismatch");
    require(dual.N == 8 && dual.N == p.M - p.N, "worked dual trace mismatch");
    require(dual.M == 14, "worked dual pairing mismatch");

    for (const RmPair& pair : sample_koszul_pairs(50)) {
        AlgebraProfile d = koszul_dual(pair.prof);
        require(d.N == pair.prof.M - pair.prof.N, "tr(g!) != M - N");
        require(d.M == pair.prof.M, "chi(v0, g! v0) != M");
        auto dims = koszul_dual_dims(pair.prof, 20);
        auto coeffs = dual_series(pair.prof.hilbert()).coefficients(20);
        for (std::size_t k = 0; k <= 20; ++k)
            require(Rational(dims[k]) == coeffs[k], "dual dims vs dual series mismatch");
    }
}

// ---------------------------------------------------------------- criterion 4

void ampleness_boundary() {
    AlgebraProfile boundary = profile(SL2Matrix(2, -1, -3, 2), KVector(1, 0));
    require(boundary.N == 4 && boundary.M == 3, "boundary profile invariants wrong");
    QuadMatrix s = s_matrix(boundary);
    require(s.trace() == QuadNum::rational(1, 3), "tr(S) != 1");
    require(s_cube_check(boundary), "S^3 != -I");

    SplitMix64 rng(0xA4B1EULL);
    std::size_t sampled = 0;
    while (sampled < 50) {
        KVector v(Integer(rng.range(-40, 40)), Integer(rng.range(-40, -1)));
        if (!is_primitive(v)) continue;
        if (chi(boundary.v0, v) <= 0) continue;
        if (!halfplane_test(*boundary.theta_attract, v)) continue;
        ++sampled;
        auto steps = trajectory(boundary, v, 3);
        bool exited =
            !steps[1].in_halfplane || !steps[2].in_halfplane || !steps[3].in_halfplane;
        require(exited, "trajectory from " + v.str() + " did not exit within 3 steps");
    }

    AlgebraProfile thin = profile(SL2Matrix(2, 1, 1, 1), KVector(0, 1));
    require(thin.N == 3 && thin.M == 1, "witness profile invariants wrong");
    auto steps = trajectory(thin, thin.v0, 50);
    for (const auto& st : steps)
        require(st.in_halfplane, "non-finite-generation witness left the half-plane");
    require(finitely_generated(thin).status == VerdictStatus::Fails,
            "finitely_generated should fail at (3, 1)");
}

// ---------------------------------------------------------------- criterion 5

void rm_construction() {
    std::vector<QuadOrder> orders = {
        QuadOrder(1, 0, -2),  QuadOrder(1, -1, -1), QuadOrder(1, 0, -3), QuadOrder(1, 0, -5),
        QuadOrder(2, -2, -1), QuadOrder(1, 0, -6),  QuadOrder(1, 0, -7), QuadOrder(1, -1, -3),
        QuadOrder(3, -1, -1), QuadOrder(5, -5, -1)};
    for (const QuadOrder& ord : orders) {
        RmPair pair = rm_pair(ord);
        require(fractional_linear(pair.g, pair.theta) == pair.theta, "g does not fix theta");
        require(classify_eigen(pair.g) == EigenClass::HyperbolicPositive,
                "unit matrix not hyperbolic");
        require(pair.prof.M >= pair.prof.N, "M < N for " + ord.str());
        require(ample(pair.prof).status == VerdictStatus::Holds, "ample verdict not Holds");
    }
    require(rm_pair(QuadOrder(1, 0, -2)).g == SL2Matrix(3, -4, -2, 3),
            "sqrt-2 order did not produce the expected unit matrix");
}

// ---------------------------------------------------------------- criterion 6

void ample_sequences() {
    QuadNum theta = QuadNum::sqrt_d(2);
    auto items = ample_sequence(theta, 20);
    require(items.size() == 20, "wrong item count");
    require(items[0].d == 9 && items[0].r == 5, "item 0 != (9, 5)");
    require(items[1].d == 11 && items[1].r == 7, "item 1 != (11, 7)");
    require(items[2].d == 17 && items[2].r == 11, "item 2 != (17, 11)");
    auto is_prime = [](const Integer& n) {
        if (n < 2) return false;
        for (Integer q = 2; q * q <= n; ++q)
            if (n % q == 0) return false;
        return true;
    };
    for (const auto& it : items) {
        require(is_prime(it.r), "rank not prime");
        require(int_gcd(int_abs(it.d), it.r) == 1, "gcd(d, r) != 1");
        QuadNum gap = QuadNum::integer(it.d, 2) - QuadNum::integer(it.r, 2) * theta;
        require(gap >= QuadNum::rational(1, 2) && gap <= QuadNum::rational(3, 2),
                "slope gap outside [1/r, 3/r]");
    }
}

// ---------------------------------------------------------------- criterion 7

void descent_chains() {
    QuadNum theta = QuadNum::sqrt_d(2);
    auto chain = descent_chain(theta, KVector(1, 0), 10);
    require(chain.size() == 10, "wrong chain length");
    require(chain[0] == KVector(-1, -1), "first vector != (-1, -1)");
    require(chain[1] == KVector(-4, -3), "second vector != (-4, -3)");
    KVector prev(1, 0);
    QuadNum prev_val = QuadNum::rational(1, 2);
    for (const KVector& w : chain) {
        require(chi(prev, w) == 1, "consecutive chi != 1");
        require(is_primitive(w), "chain vector not primitive");
        require(halfplane_test(theta, w), "chain vector left the half-plane");
        QuadNum val = QuadNum::integer(w.deg, 2) - theta * QuadNum::integer(w.rk, 2);
        require(val.sign() > 0 && val < prev_val, "positive values not strictly decreasing");
        prev = w;
        prev_val = val;
    }
}

// ---------------------------------------------------------------- criterion 8

void oracle_suites() {
    require(oracle::exhaustive_eigenlem(3, 3, 40).empty(), "eigenlem scan found violations");
    for (long n = -5; n <= 10; ++n)
        for (long m = -5; m <= 15; ++m)
            require(oracle::series_vs_recurrence(n, m, 20),
                    "series/recurrence disagree at N=" + std::to_string(n) +
                        " M=" + std::to_string(m));

    SplitMix64 rng(97531ULL);
    const SL2Matrix s(0, -1, 1, 0), t(1, 1, 0, 1), tinv(1, -1, 0, 1);
    for (int w = 0; w < 1000; ++w) {
        SL2Matrix g = SL2Matrix::identity();
        long len = rng.range(1, 20);
        for (long i = 0; i < len; ++i) {
            switch (rng.range(0, 2)) {
                case 0: g = compose(g, s); break;
                case 1: g = compose(g, t); break;
                default: g = compose(g, tinv); break;
            }
        }
        require(cube_identity_check(g), "cube identity failed on word " + std::to_string(w));
    }

    // Exhaustive four-way agreement for the growth criterion.
    std::size_t scanned = 0;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d) {
                    if (a * d - b * c != 1) continue;
                    SL2Matrix g(a, b, c, d);
                    EigenClass cls = classify_eigen(g);
                    if (cls != EigenClass::UnipotentPositive &&
                        cls != EigenClass::HyperbolicPositive)
                        continue;
                    for (long p = -3; p <= 3; ++p)
                        for (long q = -3; q <= 3; ++q) {
                            KVector v(p, q);
                            if (v.is_zero()) continue;
                            if (chi(v, act(g, v)) <= 0) continue;
                            VerpropReport rep = verprop_report(g, v, 40);
                            require(rep.i == rep.iv && rep.ii == rep.iv && rep.iii == rep.iv,
                                    "four-way disagreement at g=" + g.str() + " v=" + v.str());
                            ++scanned;
                        }
                }
    require(scanned > 200, "verprop scan unexpectedly small");
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"commutative sanity (degree-d line bundles, flip at d = 4)", commutative_sanity},
        {"orbit tables match F(t,u), R(t); proof identity over [2,10]x[1,15]", hilblem_identity},
        {"Koszul duality: worked dual matrix and 50 randomized profiles", koszul_duality},
        {"ampleness boundary: tr(S)=1, S^3=-I, exits<=3; (3,1) witness stays", ampleness_boundary},
        {"real-multiplication construction over ten orders", rm_construction},
        {"ample sequence at sqrt(2): primes, coprimality, slope gaps", ample_sequences},
        {"descent chain at sqrt(2): worked start, chi=1, strict descent", descent_chains},
        {"oracle suites: eigenlem scan, series box, cube words, four-way scan", oracle_suites},
    };

    auto start = std::chrono::steady_clock::now();
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i].run();
            std::cout << "PASS criterion " << (i + 1) << ": " << criteria[i].name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL criterion " << (i + 1) << ": " << criteria[i].name << " — "
                      << e.what() << "\n";
        }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << " ("
              << criteria.size() - failures << "/" << criteria.size() << ", " << elapsed
              << " ms)\n";
    return failures == 0 ? 0 : 1;
}
