#include <doctest.h>

#include "quatpoly/named.hpp"

using namespace qp;

TEST_CASE("quaternion set sizes") {
    CHECK(named::quaternion_set("V0").size() == 8);
    CHECK(named::quaternion_set("Vplus").size() == 8);
    CHECK(named::quaternion_set("Vminus").size() == 8);
    CHECK(named::quaternion_set("V1").size() == 8);
    CHECK(named::quaternion_set("V2").size() == 8);
    CHECK(named::quaternion_set("V3").size() == 8);
    CHECK(named::quaternion_set("T").size() == 24);
    CHECK(named::quaternion_set("Tprime").size() == 24);
    CHECK(named::quaternion_set("S").size() == 96);
    CHECK(named::quaternion_set("Stilde").size() == 96);
    CHECK(named::quaternion_set("I").size() == 120);
    CHECK(named::quaternion_set("Itilde").size() == 120);
    CHECK_THROWS(named::quaternion_set("nope"));
}

TEST_CASE("V0 is the unit-quaternion axis set") {
    PointSet v0 = named::quaternion_set("V0");
    for (int i = 0; i < 4; ++i) {
        CHECK(v0.contains(Quaternion::unit(i)));
        CHECK(v0.contains(-Quaternion::unit(i)));
    }
}

TEST_CASE("every named set consists of unit quaternions") {
    for (const auto& nm : {"V0", "Vplus", "Vminus", "V1", "V2", "V3", "T", "Tprime", "S", "I"})
        for (const auto& q : named::quaternion_set(nm)) CHECK(q.is_unit());
}

TEST_CASE("group orders") {
    CHECK(named::group("W_A3").order() == 24);
    CHECK(named::group("rot_A3").order() == 12);
    CHECK(named::group("pyritohedral").order() == 24);
    CHECK(named::group("W_B3").order() == 48);
    CHECK(named::group("W_F4").order() == 1152);
    CHECK(named::octahedral_3d().order() == 48);
    CHECK(named::pyritohedral_4d().order() == 24);
    CHECK_THROWS(named::group("nope"));
}

TEST_CASE("pair-set decompositions match the generated groups") {
    CHECK(named::d4_pair_set() == named::group("W_D4"));
    CHECK(named::rot_d4_pair_set() == named::group("rot_D4"));
    CHECK(named::snub_pair_set() == named::group("snub_group"));
    CHECK(named::f4_pair_set() == named::group("W_F4"));
    CHECK(named::a3_pair_set() == named::group("W_A3"));
    CHECK(named::rot_a3_pair_set() == named::group("rot_A3"));
    CHECK(named::pyritohedral_pair_set() == named::group("pyritohedral"));
    CHECK(named::b3_pair_set() == named::group("W_B3"));
}

TEST_CASE("snub orbit equals the S list verbatim") {
    PointSet s = orbit(named::group("snub_group"), named::snub_seed());
    CHECK(s.size() == 96);
    CHECK(s == named::quaternion_set("S"));
    PointSet sm = orbit(named::group("snub_group"), named::snub_seed_mirror());
    CHECK(sm == named::quaternion_set("Stilde"));
    CHECK(sm == s.galois_sqrt5());
}

TEST_CASE("r1 S = S~ and S is chiral") {
    const auto r1 = named::d4().reflections()[0];
    PointSet s = named::quaternion_set("S"), st = named::quaternion_set("Stilde");
    CHECK(mirror_check(s, st, r1));
    CHECK_FALSE(mirror_check(s, s, r1));
    PointSet t = named::quaternion_set("T");
    CHECK(mirror_check(t, t, r1));
    // true for every D4 reflection generator
    for (const auto& r : named::d4().reflections()) CHECK(mirror_check(s, st, r));
}

TEST_CASE("A3 weights and the chiral icosahedra") {
    const auto& a3 = named::a3();
    const long C[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a3.gram[i][j] == FieldScalar(C[i][j]));
    FieldScalar h = FieldScalar::rational(1, 2);
    CHECK(a3.weights[0] == Quaternion(0, h, h, h));
    CHECK(a3.weights[1] == Quaternion::e3());
    CHECK(a3.weights[2] == Quaternion(0, -h, h, h));

    // Lambda_I = tau w1' + w2' + tau w3' = tau e2 + tau^2 e3; -sigma Lambda_I = e2 + tau e3
    const FieldScalar tau = FieldScalar::tau();
    Quaternion lam = dynkin_to_cartesian({tau, FieldScalar(1), tau}, a3);
    CHECK(lam == Quaternion(0, 0, tau, tau * tau));
    CHECK(lam * -FieldScalar::sigma() == Quaternion(0, 0, 1, tau));

    auto ico = named::construction("icosa-a3");
    auto icom = named::construction("icosa-a3-mirror");
    CHECK(ico.points.size() == 12);
    CHECK(icom.points.size() == 12);
    // the expected sets: (+-e1 +- tau e2) etc. cyclic
    CHECK(ico.points.contains(Quaternion(0, 1, tau, 0)));
    CHECK(ico.points.contains(Quaternion(0, 0, 1, tau)));
    CHECK(ico.points.contains(Quaternion(0, tau, 0, 1)));
    CHECK(icom.points.contains(Quaternion(0, tau, 1, 0)));
    // both seed sign conventions give the same (sign-symmetric) set
    CHECK(orbit(named::group("rot_A3"), Quaternion(0, 0, tau, -FieldScalar(1))) ==
          orbit(named::group("rot_A3"), Quaternion(0, 0, -tau, FieldScalar(1))));
    // mirror images under any W(A3) reflection
    for (const auto& r : named::a3().reflections())
        CHECK(mirror_check(ico.points, icom.points, r));
}

TEST_CASE("B3 orbit joins the two icosahedra after one exact rescale") {
    auto u = PointSet::set_union(named::construction("icosa-a3").points,
                                 named::construction("icosa-a3-mirror").points);
    CHECK(u.size() == 24);
    auto to = named::construction("trunc-oct-b3");
    CHECK(to.points.size() == 24);
    // scale fixed by matching minimal edge lengths = -sigma = 1/tau
    CHECK(to.points.scaled(-FieldScalar::sigma()) == u);
}

TEST_CASE("F4 data and the joined snub orbits") {
    const auto& f4 = named::f4();
    const FieldScalar r2 = FieldScalar::sqrt2();
    CHECK(f4.gram[0][0] == FieldScalar(2));
    CHECK(f4.gram[0][1] == FieldScalar(-1));
    CHECK(f4.gram[1][2] == -r2);
    CHECK(f4.gram[2][3] == FieldScalar(-1));
    CHECK(f4.gram[0][2] == FieldScalar(0));
    CHECK(f4.gram[0][3] == FieldScalar(0));
    CHECK(f4.gram[1][3] == FieldScalar(0));

    // Lambda' = sigma^2/2 (0,0,tau,1) = (tau + e1 - sigma e2)/2
    const FieldScalar tau = FieldScalar::tau(), sig = FieldScalar::sigma();
    FieldScalar pref = sig * sig * FieldScalar::rational(1, 2);
    Quaternion lam = dynkin_to_cartesian({FieldScalar(0), FieldScalar(0), tau, FieldScalar(1)}, f4) * pref;
    FieldScalar h = FieldScalar::rational(1, 2);
    CHECK(lam == Quaternion(tau * h, h, -sig * h, 0));
    CHECK(named::quaternion_set("Stilde").contains(lam));

    // W(F4) orbit is S u S~
    auto uni = named::construction("f4-union");
    CHECK(uni.points.size() == 192);
    CHECK(uni.points == PointSet::set_union(named::quaternion_set("S"), named::quaternion_set("Stilde")));

    // rank mismatch rejected
    CHECK_THROWS(dynkin_to_cartesian({tau}, f4));
}

TEST_CASE("W_B3 fixes 1+e1 and is the cube-cell site symmetry") {
    const auto& b3 = named::group("W_B3");
    Quaternion w4(1, 1, 0, 0);
    for (const auto& g : b3) CHECK(g.apply(w4) == w4);
}

TEST_CASE("D4 Dynkin-basis seed reproduces the snub seed") {
    const FieldScalar tau = FieldScalar::tau(), sig = FieldScalar::sigma();
    Quaternion lam = dynkin_to_cartesian({tau, FieldScalar(1), tau, tau}, named::d4());
    CHECK(lam * (sig * sig * FieldScalar::rational(1, 2)) == named::snub_seed());
    CHECK(dynkin_to_cartesian({0, 0, 0, FieldScalar(1)}, named::d4()) == Quaternion::one());
}

TEST_CASE("600-cell = 24-cell + snub 24-cell") {
    CHECK(named::quaternion_set("I") ==
          PointSet::set_union(named::quaternion_set("T"), named::quaternion_set("S")));
    CHECK(named::construction("600cell").points.size() == 120);
}

TEST_CASE("W_H4 closure equals the icosian pair set") {
    const auto& h4 = named::group("W_H4");
    CHECK(h4.order() == 14400);
    CHECK(named::h4_pair_set() == h4);
}

TEST_CASE("generation preconditions") {
    CHECK_THROWS(Group::generate({}, 10, "empty"));
}
