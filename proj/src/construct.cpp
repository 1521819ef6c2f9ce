#include "rmtori/construct.hpp"

#include "rmtori/errors.hpp"

namespace rmtori {

namespace {

bool next_prime_after(Integer& p) {
    auto is_prime = [](const Integer& n) {
        if (n < 2) return false;
        for (Integer q = 2; q * q <= n; ++q)
            if (n % q == 0) return false;
        return true;
    };
    do {
        ++p;
    } while (!is_prime(p));
    return true;
}

}  // namespace

RmPair rm_pair(const QuadOrder& order, bool koszul_grade) {
    QuadNum theta = theta_of(order);
    QuadNum r = unit_below_one(order);
    SL2Matrix g = matrix_of_unit(order, r);
    Integer n = trace(g);
    Integer threshold = koszul_grade ? Integer(n + 2) : n;

    // Sup-norm shells, lexicographic (deg, then rk) within a shell; the
    // first acceptor wins, making the construction deterministic.
    for (Integer shell = 1;; ++shell) {
        for (Integer p = -shell; p <= shell; ++p) {
            bool p_on_edge = (p == -shell || p == shell);
            for (Integer q = -shell; q <= shell; ++q) {
                if (!p_on_edge && q != -shell && q != shell) continue;
                KVector v(p, q);
                if (!is_primitive(v)) continue;
                if (!halfplane_test(theta, v)) continue;
                if (chi(v, act(g, v)) < threshold) continue;
                AlgebraProfile prof = profile(g, v);
                if (fractional_linear(g, theta) != theta)
                    throw InternalError("rm_pair: g does not fix theta");
                if (prof.M < n) throw InternalError("rm_pair: M < N after acceptance");
                if (ample(prof).status != VerdictStatus::Holds)
                    throw InternalError("rm_pair: accepted profile is not ample");
                return RmPair{order, theta, r, g, v, std::move(prof)};
            }
        }
        if (shell > 1000)
            throw InternalError("rm_pair: no acceptable vector within shell bound");
    }
}

std::vector<AmpleSeqItem> ample_sequence(const QuadNum& theta, std::size_t count) {
    if (theta.is_rational())
        throw RationalThetaError("ample_sequence: theta must be irrational");
    std::vector<AmpleSeqItem> items;
    items.reserve(count);
    Integer r = 3;  // incremental prime stream starting at 5
    QuadNum one = QuadNum::rational(1, theta.D());
    for (std::size_t i = 0; i < count; ++i) {
        next_prime_after(r);
        QuadNum rtheta = QuadNum::integer(r, theta.D()) * theta;
        // Least integer >= r*theta + 1; r*theta is irrational so this is
        // floor(r*theta) + 2.
        Integer d = rtheta.floor() + 2;
        if (d % r == 0) ++d;  // restores coprimality; cannot recur
        if (int_gcd(int_abs(d), r) != 1)
            throw InternalError("ample_sequence: gcd(d, r) != 1 after adjustment");
        QuadNum gap = QuadNum::integer(d, theta.D()) - rtheta;  // r*(mu - theta)
        if (!(gap >= one) || !(gap <= QuadNum::rational(3, theta.D())))
            throw InternalError("ample_sequence: slope gap out of [1/r, 3/r]");
        items.push_back(AmpleSeqItem{d, r, true});
    }
    return items;
}

SL2Matrix opposite_matrix(const SL2Matrix& g) { return {g.d, g.b, g.c, g.a}; }

}  // namespace rmtori
