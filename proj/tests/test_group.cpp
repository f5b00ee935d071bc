#include <doctest.h>

#include "quatpoly/group.hpp"
#include "quatpoly/named.hpp"
#include "test_util.hpp"

using namespace qp;

TEST_CASE("reflection fixes the orthogonal hyperplane and negates the root") {
    const auto& d4 = named::d4();
    auto r = d4.reflections();
    for (int i = 0; i < 4; ++i) {
        CHECK(r[i].apply(d4.roots[i]) == -d4.roots[i]);
        CHECK((r[i] * r[i]).is_identity());
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(r[i].apply(d4.weights[j]) == d4.weights[j]);
    }
    // alpha_1 = e2 - e3 swaps e2 and e3
    CHECK(r[0].apply(Quaternion::e2()) == Quaternion::e3());
    CHECK(r[0].apply(Quaternion::e3()) == Quaternion::e2());
    CHECK_THROWS(reflection_from_root(Quaternion()));
}

TEST_CASE("composition is the action homomorphism") {
    std::mt19937_64 rng(7);
    const auto& snub = named::group("snub_group");
    const auto& els = snub.elements();
    std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
    for (int it = 0; it < 500; ++it) {
        const GroupElement &g = els[pick(rng)], &h = els[pick(rng)];
        Quaternion v = testutil::random_quaternion(rng);
        CHECK((g * h).apply(v) == g.apply(h.apply(v)));
    }
}

TEST_CASE("bracket identities") {
    std::mt19937_64 rng(8);
    const auto& w = named::group("W_D4");
    const auto& els = w.elements();
    std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
    GroupElement id = GroupElement::identity();
    for (int it = 0; it < 200; ++it) {
        const GroupElement& g = els[pick(rng)];
        CHECK(id * g == g);
        CHECK(g * id == g);
        CHECK(g * g.inverse() == id);
        CHECK(g.inverse() * g == id);
    }
    // [p,q]* o [q,p]* = [1,1]
    for (int it = 0; it < 200; ++it) {
        const GroupElement& g = els[pick(rng)];
        if (!g.star()) continue;
        GroupElement h(g.q(), g.p(), true);
        CHECK(g * h == id);
    }
}

TEST_CASE("canonical sign identifies (p,q) with (-p,-q)") {
    Quaternion p(0, FieldScalar::inv_sqrt2(), -FieldScalar::inv_sqrt2(), 0);
    GroupElement a(p, p, false);
    GroupElement b(-p, -p, false);
    CHECK(a == b);
    CHECK(a.p()[1].sign() > 0);
}

TEST_CASE("generation by closure reproduces the D4 tower orders") {
    CHECK(named::group("W_D4").order() == 192);
    CHECK(named::group("rot_D4").order() == 96);
    CHECK(named::group("snub_group").order() == 576);
    // closure caps abort loudly
    CHECK_THROWS(Group::generate(named::d4().reflections(), 10, "capped"));
}

TEST_CASE("orbit-stabilizer identity on the snub group") {
    const auto& snub = named::group("snub_group");
    // orbit of omega_4 = 1 is the 24-cell, stabilizer has order 24
    PointSet o = orbit(snub, Quaternion::one());
    Group st = stabilizer(snub, Quaternion::one());
    CHECK(o.size() == 24);
    CHECK(st.order() == 24);
    CHECK(o.size() * st.order() == snub.order());
    CHECK(o == named::quaternion_set("T"));

    // +-omega_2/sqrt2 as a setwise pair: T_d x C2 of order 48
    Quaternion w2h(FieldScalar::inv_sqrt2(), FieldScalar::inv_sqrt2(), 0, 0);
    PointSet pair(std::vector<Quaternion>{w2h, -w2h});
    Group stp = stabilizer(snub, pair);
    CHECK(stp.order() == 48);
    CHECK(snub.order() / stp.order() == 12);

    // stabilizing the origin: the whole group
    CHECK(stabilizer(snub, Quaternion()).order() == snub.order());
}

TEST_CASE("named groups are closed under sampled composition") {
    std::mt19937_64 rng(9);
    for (const auto& name : {"W_A3", "rot_A3", "pyritohedral", "W_D4", "snub_group", "W_B3"}) {
        const auto& g = named::group(name);
        const auto& els = g.elements();
        std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
        for (int it = 0; it < 100; ++it) {
            CHECK(g.contains(els[pick(rng)] * els[pick(rng)]));
            CHECK(g.contains(els[pick(rng)].inverse()));
        }
    }
}
