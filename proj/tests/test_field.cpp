#include <doctest.h>

#include <cmath>

#include "quatpoly/field.hpp"
#include "test_util.hpp"

using namespace qp;

TEST_CASE("basis products") {
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt5() == FieldScalar::sqrt10());
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt2() == FieldScalar(2));
    CHECK(FieldScalar::sqrt5() * FieldScalar::sqrt5() == FieldScalar(5));
    CHECK(FieldScalar::sqrt10() * FieldScalar::sqrt10() == FieldScalar(10));
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt10() == FieldScalar(2) * FieldScalar::sqrt5());
    CHECK(FieldScalar::sqrt5() * FieldScalar::sqrt10() == FieldScalar(5) * FieldScalar::sqrt2());
}

TEST_CASE("golden ratio identities") {
    const FieldScalar tau = FieldScalar::tau(), sigma = FieldScalar::sigma();
    // (1+sqrt5)(1-sqrt5)/4 = (1-5)/4 = -1
    CHECK(tau * sigma == FieldScalar(-1));
    // (1+sqrt5)^2/4 = (6+2sqrt5)/4 = tau + 1
    CHECK(tau * tau == tau + FieldScalar(1));
    CHECK(sigma * sigma == sigma + FieldScalar(1));
    CHECK(tau + sigma == FieldScalar(1));
}

TEST_CASE("exact sign") {
    CHECK(FieldScalar().sign() == 0);
    CHECK(FieldScalar::sigma().sign() < 0);
    CHECK(FieldScalar::tau().sign() > 0);
    // 3 sqrt2 - 2 sqrt5: squares 18 < 20
    FieldScalar x = FieldScalar(3) * FieldScalar::sqrt2() - FieldScalar(2) * FieldScalar::sqrt5();
    CHECK(x.sign() < 0);
    CHECK((-x).sign() > 0);
    // sqrt10 barely beats 3: 10 > 9
    CHECK((FieldScalar::sqrt10() - FieldScalar(3)).sign() > 0);
    // tau^4 = (7 + 3 sqrt5)/2 exactly
    FieldScalar t4 = FieldScalar::tau() * FieldScalar::tau() * FieldScalar::tau() * FieldScalar::tau();
    CHECK((t4 - FieldScalar(make_rational(7, 2), Rational(0), make_rational(3, 2), Rational(0))).sign() == 0);
}

TEST_CASE("sign is multiplicative and matches floats away from zero") {
    std::mt19937_64 rng(0xC0FFEE);
    int checked = 0;
    for (int it = 0; it < 20000; ++it) {
        FieldScalar x = testutil::random_field(rng), y = testutil::random_field(rng);
        CHECK((x * y).sign() == x.sign() * y.sign());
        double fx = x.to_double();
        if (std::fabs(fx) > 1e-9) {
            CHECK(x.sign() == (fx > 0 ? 1 : -1));
            ++checked;
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("inverse and division") {
    std::mt19937_64 rng(0xBEEF);
    for (int it = 0; it < 2000; ++it) {
        FieldScalar x = testutil::random_field(rng);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == FieldScalar(1));
    }
    CHECK_THROWS(FieldScalar().inverse());
    CHECK(FieldScalar::inv_sqrt2() == FieldScalar::sqrt2().inverse());
    CHECK(FieldScalar::tau().inverse() == -FieldScalar::sigma());
}

TEST_CASE("field_sqrt covers the subfield forms") {
    auto check_root = [](const FieldScalar& x) {
        auto r = field_sqrt(x);
        REQUIRE(r.has_value());
        CHECK(*r * *r == x);
        CHECK(r->sign() >= 0);
    };
    check_root(FieldScalar(2));
    check_root(FieldScalar::rational(9, 4));
    check_root(FieldScalar(5));
    check_root(FieldScalar(10));
    check_root(FieldScalar(8));
    const FieldScalar tau = FieldScalar::tau();
    check_root(tau * tau);
    check_root(tau * tau * FieldScalar(2));               // sqrt = tau sqrt2
    FieldScalar t4_8 = tau * tau * tau * tau * FieldScalar::rational(1, 8);
    check_root(t4_8);                                     // sqrt = (3 sqrt2 + sqrt10)/8
    check_root(FieldScalar(3) + FieldScalar(2) * FieldScalar::sqrt2());   // (1+sqrt2)^2
    check_root((FieldScalar(3) + FieldScalar(2) * FieldScalar::sqrt2()) * FieldScalar(5));
    check_root(FieldScalar(11) + FieldScalar(2) * FieldScalar::sqrt10()); // (1+sqrt10)^2
    check_root(FieldScalar(7) + FieldScalar(2) * FieldScalar::sqrt10());  // (sqrt2+sqrt5)^2
    CHECK_FALSE(field_sqrt(-FieldScalar(1)).has_value());
    CHECK_FALSE(field_sqrt(FieldScalar(3)).has_value());
    CHECK(field_sqrt(FieldScalar(0)) == FieldScalar(0));
}

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("3/2") == make_rational(3, 2));
    CHECK(parse_rational("-7") == make_rational(-7));
    CHECK(rational_str(make_rational(6, -4)) == "-3/2");
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("canonical reduced storage") {
    FieldScalar x(make_rational(6, 4), make_rational(0), make_rational(-10, 5), make_rational(0));
    CHECK(x.a == make_rational(3, 2));
    CHECK(x.c == make_rational(-2));
    CHECK(x.str() == "3/2 + 0*r2 + -2*r5 + 0*r10");
}
