#include <doctest.h>

#include <map>
#include <set>

#include "quatpoly/named.hpp"
#include "quatpoly/project3d.hpp"

using namespace qp;

using Tag = PolygonClass::Tag;

TEST_CASE("hull3d: icosahedron from the A3 orbit") {
    auto ico = named::construction("icosa-a3");
    Solid3 h = hull3d(imaginary_parts(ico.points));
    h.validate();
    CHECK(h.vertices.size() == 12);
    CHECK(h.edge_count() == 30);
    CHECK(h.faces.size() == 20);
    auto c = h.face_census();
    CHECK(c[Tag::EquilateralTriangle] == 20);
    // one exact edge length: 4 - 2tau... edges of (+-e1 +- tau e2) icosahedron: |sigma|^2 + 1
    for (const auto& pc : h.classify_faces()) CHECK(pc.distinct_len2().size() == 1);
}

TEST_CASE("hull3d: quasi-regular truncated octahedron from the joined orbits") {
    auto u = PointSet::set_union(named::construction("icosa-a3").points,
                                 named::construction("icosa-a3-mirror").points);
    Solid3 h = hull3d(imaginary_parts(u));
    h.validate();
    CHECK(h.vertices.size() == 24);
    CHECK(h.faces.size() == 14);
    auto c = h.face_census();
    CHECK(c[Tag::Square] == 6);
    CHECK(c[Tag::IsogonalHexagon] == 8);
    // hexagon edge lengths in exact ratio tau: len2 ratio tau^2
    FieldScalar tau2 = FieldScalar::tau() * FieldScalar::tau();
    for (const auto& pc : h.classify_faces()) {
        if (pc.tag != Tag::IsogonalHexagon) continue;
        auto d2 = pc.distinct_len2();
        REQUIRE(d2.size() == 2);
        CHECK(d2[1] == d2[0] * tau2);
    }
    CHECK_THROWS(hull3d(std::vector<Vec3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
}

TEST_CASE("real-part partition of S: class sizes 12x6 + 24") {
    auto classes = partition_by_real_part(named::quaternion_set("S"));
    REQUIRE(classes.size() == 7);
    std::map<std::string, int> sizes;
    for (const auto& c : classes) sizes[c.label] = c.points.size();
    CHECK(sizes["tau/2"] == 12);
    CHECK(sizes["-tau/2"] == 12);
    CHECK(sizes["sigma/2"] == 12);
    CHECK(sizes["-sigma/2"] == 12);
    CHECK(sizes["1/2"] == 12);
    CHECK(sizes["-1/2"] == 12);
    CHECK(sizes["0"] == 24);
    // a set with an unexpected real part is rejected
    CHECK_THROWS(partition_by_real_part(named::quaternion_set("T")));
}

TEST_CASE("the four golden classes hull to regular icosahedra") {
    auto classes = partition_by_real_part(named::quaternion_set("S"));
    for (const auto& c : classes) {
        if (c.label != "tau/2" && c.label != "-tau/2" && c.label != "sigma/2" &&
            c.label != "-sigma/2")
            continue;
        Solid3 h = hull3d(c.imaginary);
        h.validate();
        CHECK(h.vertices.size() == 12);
        CHECK(h.faces.size() == 20);
        auto cc = h.face_census();
        CHECK(cc[Tag::EquilateralTriangle] == 20);
    }
}

TEST_CASE("the +-1/2 classes are quasi-regular icosahedra (descriptive census)") {
    auto classes = partition_by_real_part(named::quaternion_set("S"));
    for (const auto& c : classes) {
        if (c.label != "1/2" && c.label != "-1/2") continue;
        Solid3 h = hull3d(c.imaginary);
        h.validate();
        CHECK(h.vertices.size() == 12);
        CHECK(h.faces.size() == 20);
        auto cc = h.face_census();
        // descriptive census: 8 equilateral + 12 isosceles triangles with the
        // two edge lengths in ratio tau
        CHECK(cc[Tag::EquilateralTriangle] == 8);
        CHECK(cc[Tag::IsoscelesTriangle] == 12);
    }
}

TEST_CASE("the zero-real-part class: triangles, golden rectangles, trapezoids") {
    auto classes = partition_by_real_part(named::quaternion_set("S"));
    const auto& zero = classes.back();
    REQUIRE(zero.label == "0");
    Solid3 h = hull3d(zero.imaginary);
    h.validate();
    CHECK(h.vertices.size() == 24);
    CHECK(h.edge_count() == 48);
    CHECK(h.faces.size() == 26);
    auto cc = h.face_census();
    CHECK(cc[Tag::EquilateralTriangle] == 8);
    CHECK(cc[Tag::GoldenRectangle] == 6);
    CHECK(cc[Tag::Trapezoid] == 12);
    // trapezoid edge lengths in exact ratio tau (1 and tau^-1 at unit radius)
    FieldScalar tau2 = FieldScalar::tau() * FieldScalar::tau();
    for (const auto& pc : h.classify_faces()) {
        if (pc.tag != Tag::Trapezoid) continue;
        auto d2 = pc.distinct_len2();
        REQUIRE(d2.size() == 2);
        CHECK(d2[1] == d2[0] * tau2);
    }
}

TEST_CASE("pyritohedral orbit decomposition of S") {
    auto orbits = pyritohedral_orbits(named::quaternion_set("S"), named::pyritohedral_4d());
    std::multiset<int> sizes;
    for (const auto& o : orbits) sizes.insert(o.size());
    CHECK(sizes == std::multiset<int>({12, 12, 12, 12, 12, 12, 24}));
    // each orbit lies in a single real-part class
    for (const auto& o : orbits)
        for (const auto& p : o) CHECK(p[0] == o[0][0]);
}

TEST_CASE("pyritohedral orbits of the 24-cell group as 8+8+8") {
    auto orbits = pyritohedral_orbits(named::quaternion_set("T"), named::pyritohedral_4d());
    std::multiset<int> sizes;
    for (const auto& o : orbits) sizes.insert(o.size());
    CHECK(sizes == std::multiset<int>({1, 1, 6, 8, 8}));
    // grouped as 8+8+8: the 1+1+6 orbits union to V0, the two 8-orbits are
    // the real-part +-1/2 halves of V+ u V-
    std::vector<Quaternion> v0_parts;
    FieldScalar half = FieldScalar::rational(1, 2);
    for (const auto& o : orbits) {
        if (o.size() == 8) {
            for (const auto& p : o) CHECK((p[0] == half || p[0] == -half));
        } else {
            v0_parts.insert(v0_parts.end(), o.begin(), o.end());
        }
    }
    CHECK(PointSet(v0_parts) == named::quaternion_set("V0"));
}

TEST_CASE("pyritohedral orbit preconditions") {
    // the named pyritohedral group [T, +-Tbar] flips real parts via [1,-1]
    CHECK_THROWS(pyritohedral_orbits(named::quaternion_set("T"), named::group("pyritohedral")));
    // a single fixed point: one orbit of size <= 2
    auto orbits = pyritohedral_orbits(PointSet(std::vector<Quaternion>{Quaternion::one()}),
                                      named::pyritohedral_4d());
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size() <= 2);
}

TEST_CASE("polygon classifier edge cases") {
    FieldScalar z(0), o(1), t = FieldScalar::tau();
    // golden rectangle
    auto rect = classify_polygon({{z, z, z}, {t, z, z}, {t, o, z}, {z, o, z}});
    CHECK(rect.tag == Tag::GoldenRectangle);
    // unit square
    CHECK(classify_polygon({{z, z, z}, {o, z, z}, {o, o, z}, {z, o, z}}).tag == Tag::Square);
    // non-golden rectangle is Other
    FieldScalar three(3);
    CHECK(classify_polygon({{z, z, z}, {three, z, z}, {three, o, z}, {z, o, z}}).tag == Tag::Other);
    // kite
    auto kite = classify_polygon({{z, FieldScalar(-2), z}, {o, z, z}, {z, o, z}, {-o, z, z}});
    CHECK(kite.tag == Tag::Kite);
    // trapezoid: exactly one parallel pair
    auto trap = classify_polygon({{z, z, z}, {three, z, z}, {FieldScalar(2), o, z}, {o, o, z}});
    CHECK(trap.tag == Tag::Trapezoid);
    // non-planar cycle rejected
    CHECK_THROWS(classify_polygon({{z, z, z}, {o, z, z}, {o, o, o}, {z, o, FieldScalar(2)}}));
    // scalene triangle is Other
    CHECK(classify_polygon({{z, z, z}, {FieldScalar(2), z, z}, {z, three, z}}).tag == Tag::Other);
}
