#include <doctest.h>

#include "quatpoly/named.hpp"
#include "quatpoly/quaternion.hpp"
#include "test_util.hpp"

using namespace qp;

TEST_CASE("unit multiplication table") {
    CHECK(Quaternion::e1() * Quaternion::e2() == Quaternion::e3());
    CHECK(Quaternion::e2() * Quaternion::e3() == Quaternion::e1());
    CHECK(Quaternion::e3() * Quaternion::e1() == Quaternion::e2());
    CHECK(Quaternion::e2() * Quaternion::e1() == -Quaternion::e3());
    CHECK(Quaternion::e1() * Quaternion::e1() == -Quaternion::one());
    std::mt19937_64 rng(1);
    Quaternion q = testutil::random_quaternion(rng);
    CHECK(Quaternion::one() * q == q);
    CHECK(q * Quaternion::one() == q);
}

TEST_CASE("scalar product matches the bracket definition") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 300; ++it) {
        Quaternion p = testutil::random_quaternion(rng), q = testutil::random_quaternion(rng);
        // (p,q) = (pbar q + qbar p)/2, a real quaternion
        Quaternion half_sum = (p.conjugate() * q + q.conjugate() * p) * FieldScalar::rational(1, 2);
        CHECK(half_sum[0] == quat_dot(p, q));
        CHECK(half_sum[1].is_zero());
        CHECK(half_sum[2].is_zero());
        CHECK(half_sum[3].is_zero());
        CHECK(quat_dot(p, q) == quat_dot(q, p));
    }
}

TEST_CASE("norm is multiplicative, conjugation anti-homomorphic") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 300; ++it) {
        Quaternion p = testutil::random_quaternion(rng), q = testutil::random_quaternion(rng);
        CHECK((p * q).norm2() == p.norm2() * q.norm2());
        CHECK((p * q).conjugate() == q.conjugate() * p.conjugate());
        CHECK(p.conjugate() * p == Quaternion(p.norm2(), 0, 0, 0));
    }
}

TEST_CASE("scalar-product spot checks") {
    CHECK(quat_dot(Quaternion::e1(), Quaternion::e1()) == FieldScalar(1));
    const auto& d4 = named::d4();
    CHECK(quat_dot(d4.roots[0], d4.roots[1]) == FieldScalar(-1));
    // |Lambda'_I|^2 = (tau^2 + sigma^2 + 1)/4 = 1
    CHECK(named::snub_seed().norm2() == FieldScalar(1));
    CHECK(named::snub_seed().is_unit());
}

TEST_CASE("D4 Cartan matrix and weights") {
    const auto& d4 = named::d4();
    const long C[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(d4.gram[i][j] == FieldScalar(C[i][j]));
    // omega_i dual to alpha_j
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(quat_dot(d4.weights[i], d4.roots[j]) == FieldScalar(i == j ? 1 : 0));
    FieldScalar h = FieldScalar::rational(1, 2);
    CHECK(d4.weights[0] == Quaternion(h, h, h, -h));
    CHECK(d4.weights[1] == Quaternion(1, 1, 0, 0));
    CHECK(d4.weights[2] == Quaternion(h, h, -h, -h));
    CHECK(d4.weights[3] == Quaternion::one());
}

TEST_CASE("galois mirror exchanges the snub seeds") {
    CHECK(named::snub_seed().galois_sqrt5() == named::snub_seed_mirror());
    CHECK(named::snub_seed_mirror().galois_sqrt5() == named::snub_seed());
}
