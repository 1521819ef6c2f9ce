#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rmtori {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer int_abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Floor division (rounds toward -infinity; cpp_int's / truncates).
inline Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Integer q = a / b;
    Integer r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Largest integer k with k*k <= n. Requires n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer s = isqrt(n);
    return s * s == n;
}

/// Writes n > 0 as f^2 * d with d squarefree; returns (f, d).
inline std::pair<Integer, Integer> squarefree_decompose(Integer n) {
    if (n <= 0) throw std::domain_error("squarefree_decompose: argument must be positive");
    Integer f = 1, d = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2 == 1) d *= p;
    }
    d *= n;  // leftover prime
    return {f, d};
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    return Rational(num, den);
}

inline Integer rational_floor(const Rational& q) {
    return floor_div(boost::multiprecision::numerator(q),
                     boost::multiprecision::denominator(q));
}

inline Integer rational_ceil(const Rational& q) {
    return -rational_floor(-q);
}

/// Small deterministic PRNG for reproducible sampling in scans and tests.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] for small ranges.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace rmtori
