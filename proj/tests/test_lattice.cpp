#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmtori/lattice.hpp"
#include "rmtori/numeric.hpp"

using namespace rmtori;

namespace {

SL2Matrix random_sl2(SplitMix64& rng, int word_len = 12) {
    const SL2Matrix s(0, -1, 1, 0), t(1, 1, 0, 1), tinv(1, -1, 0, 1);
    SL2Matrix g = SL2Matrix::identity();
    for (int i = 0; i < word_len; ++i) {
        switch (rng.range(0, 2)) {
            case 0: g = compose(g, s); break;
            case 1: g = compose(g, t); break;
            default: g = compose(g, tinv); break;
        }
    }
    return g;
}

KVector random_vec(SplitMix64& rng) {
    KVector v(Integer(rng.range(-20, 20)), Integer(rng.range(-20, 20)));
    if (v.is_zero()) v = KVector(1, 0);
    return v;
}

// Independent 2x2 determinant used as the oracle for chi.
Integer det2(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    return a * d - b * c;
}

}  // namespace

TEST_CASE("chi: worked values and determinant oracle") {
    CHECK(chi(KVector(0, 1), KVector(0, 1)) == 0);
    for (long d = -6; d <= 6; ++d)
        CHECK(chi(KVector(0, 1), KVector(d, 1)) == d);
    CHECK(chi(KVector(3, 1), KVector(5, -3)) == 14);

    SplitMix64 rng(1);
    for (int i = 0; i < 200; ++i) {
        KVector v = random_vec(rng), w = random_vec(rng);
        CHECK(chi(v, w) == -det2(v.deg, w.deg, v.rk, w.rk));
    }
}

TEST_CASE("chi: antisymmetric and bilinear") {
    SplitMix64 rng(2);
    for (int i = 0; i < 200; ++i) {
        KVector u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
        Integer s(rng.range(-5, 5));
        CHECK(chi(u, v) == -chi(v, u));
        CHECK(chi(u + v * s, w) == chi(u, w) + s * chi(v, w));
        CHECK(chi(w, u + v * s) == chi(w, u) + s * chi(w, v));
    }
}

TEST_CASE("chi vanishes exactly on proportional pairs") {
    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        KVector v = random_vec(rng);
        Integer s(rng.range(-7, 7));
        CHECK(chi(v, v * s) == 0);
    }
    CHECK(chi(KVector(2, 3), KVector(4, 6)) == 0);
    CHECK(chi(KVector(2, 3), KVector(4, 7)) != 0);
}

TEST_CASE("act: shear, worked product, inverse identity") {
    CHECK(act(SL2Matrix(1, 5, 0, 1), KVector(0, 1)) == KVector(5, 1));
    CHECK(act(SL2Matrix(3, -4, -2, 3), KVector(3, 1)) == KVector(5, -3));
    SplitMix64 rng(4);
    for (int i = 0; i < 100; ++i) {
        SL2Matrix g = random_sl2(rng);
        KVector v = random_vec(rng);
        CHECK(act(g, act(inverse(g), v)) == v);
    }
}

TEST_CASE("act preserves chi") {
    SplitMix64 rng(5);
    for (int i = 0; i < 200; ++i) {
        SL2Matrix g = random_sl2(rng);
        KVector v = random_vec(rng), w = random_vec(rng);
        CHECK(chi(act(g, v), act(g, w)) == chi(v, w));
    }
}

TEST_CASE("compose, inverse, trace basics") {
    CHECK(inverse(SL2Matrix(3, -4, -2, 3)) == SL2Matrix(3, 4, 2, 3));
    CHECK(trace(SL2Matrix(2, 1, 1, 1)) == 3);
    SplitMix64 rng(6);
    for (int i = 0; i < 100; ++i) {
        SL2Matrix g = random_sl2(rng);
        CHECK(compose(g, inverse(g)) == SL2Matrix::identity());
        CHECK(compose(inverse(g), g) == SL2Matrix::identity());
    }
}

TEST_CASE("construction rejects non-unimodular matrices") {
    CHECK_THROWS_AS(SL2Matrix(1, 0, 0, 2), NotUnimodularError);
    CHECK_THROWS_AS(SL2Matrix(2, 0, 0, 2), NotUnimodularError);
    CHECK_THROWS_AS(SL2Matrix(0, 1, 1, 0), NotUnimodularError);  // det -1
}

TEST_CASE("classify_eigen on all trace ranges") {
    CHECK(classify_eigen(SL2Matrix(1, 4, 0, 1)) == EigenClass::UnipotentPositive);
    CHECK(classify_eigen(SL2Matrix(3, -4, -2, 3)) == EigenClass::HyperbolicPositive);
    CHECK(classify_eigen(SL2Matrix(0, -1, 1, 0)) == EigenClass::Other);
    CHECK(classify_eigen(SL2Matrix::identity()) == EigenClass::Identity);
    CHECK(classify_eigen(SL2Matrix(-1, 0, 0, -1)) == EigenClass::Other);
    CHECK(classify_eigen(SL2Matrix(-2, -1, -1, -1)) == EigenClass::Other);
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        SL2Matrix g = random_sl2(rng);
        Integer t = trace(g);
        bool hyper = classify_eigen(g) == EigenClass::HyperbolicPositive;
        CHECK(hyper == (t >= 3));
        bool unip = classify_eigen(g) == EigenClass::UnipotentPositive;
        CHECK(unip == (t == 2 && !g.is_identity()));
    }
}

TEST_CASE("cube identity holds across SL2(Z)") {
    CHECK(cube_identity_check(SL2Matrix(1, 1, 0, 1)));
    CHECK(cube_identity_check(SL2Matrix(2, 1, 1, 1)));
    SplitMix64 rng(8);
    for (int i = 0; i < 1000; ++i) CHECK(cube_identity_check(random_sl2(rng, 18)));
}

TEST_CASE("left twist matrix: worked values") {
    SL2Matrix l = left_twist_matrix(KVector(0, 1));
    CHECK(act(l, KVector(1, 0)) == KVector(1, -1));
    // Fixes the base vector.
    SplitMix64 rng(9);
    for (int i = 0; i < 100; ++i) {
        KVector v0 = random_vec(rng);
        if (!is_primitive(v0)) continue;
        CHECK(act(left_twist_matrix(v0), v0) == v0);
    }
    CHECK(left_twist_matrix(KVector(3, 1)).a * left_twist_matrix(KVector(3, 1)).d -
              left_twist_matrix(KVector(3, 1)).b * left_twist_matrix(KVector(3, 1)).c ==
          1);
}

TEST_CASE("right twist matrix: worked values") {
    CHECK(right_twist_matrix(KVector(3, 1)) == SL2Matrix(-4, 9, -1, 2));
    SplitMix64 rng(10);
    for (int i = 0; i < 100; ++i) {
        KVector v0 = random_vec(rng);
        if (!is_primitive(v0)) continue;
        SL2Matrix r = right_twist_matrix(v0);
        CHECK(act(r, v0) == -v0);
        // Both twists implement the defining chi formulas.
        KVector w = random_vec(rng);
        CHECK(act(r, w) == v0 * chi(w, v0) - w);
        CHECK(act(left_twist_matrix(v0), w) == w - v0 * chi(v0, w));
        // Left and right twists are negatives of mutually inverse maps.
        CHECK(compose(left_twist_matrix(v0), r) == SL2Matrix(-1, 0, 0, -1));
        CHECK(compose(r, left_twist_matrix(v0)) == SL2Matrix(-1, 0, 0, -1));
    }
}

TEST_CASE("twist matrices reject non-primitive bases") {
    CHECK_THROWS_AS(left_twist_matrix(KVector(2, 4)), NotPrimitiveError);
    CHECK_THROWS_AS(right_twist_matrix(KVector(0, 0)), NotPrimitiveError);
    CHECK_THROWS_AS(right_twist_matrix(KVector(3, 6)), NotPrimitiveError);
}

TEST_CASE("matrix_power matches repeated composition") {
    SplitMix64 rng(11);
    for (int i = 0; i < 50; ++i) {
        SL2Matrix g = random_sl2(rng, 6);
        SL2Matrix acc = SL2Matrix::identity();
        for (int k = 0; k <= 6; ++k) {
            CHECK(matrix_power(g, k) == acc);
            acc = compose(acc, g);
        }
        CHECK(matrix_power(g, -3) == inverse(matrix_power(g, 3)));
    }
}
