#include <doctest.h>

#include <random>

#include "quatpoly/named.hpp"
#include "quatpoly/polytope.hpp"
#include "test_util.hpp"

using namespace qp;

TEST_CASE("edge graph basics") {
    // regular tetrahedron embedded in 4D: 6 edges
    FieldScalar h = FieldScalar::rational(1, 2);
    PointSet tet(std::vector<Quaternion>{
        {h, h, h, -h}, {h, -h, -h, -h}, {-h, h, -h, -h}, {-h, -h, h, -h}});
    EdgeGraph g = edge_graph(tet);
    CHECK(g.edges.size() == 6);
    CHECK(g.min_dist2 == FieldScalar(2));

    // 24-cell: each vertex has 8 neighbors at squared distance 1
    EdgeGraph gt = edge_graph(named::quaternion_set("T"));
    CHECK(gt.min_dist2 == FieldScalar(1));
    for (int d : gt.degree) CHECK(d == 8);

    CHECK_THROWS(edge_graph(PointSet(std::vector<Quaternion>{Quaternion::one()})));
}

TEST_CASE("snub 24-cell edge graph: 9 neighbors at 2 - tau") {
    PointSet s = named::quaternion_set("S");
    EdgeGraph g = edge_graph(s);
    CHECK(g.min_dist2 == FieldScalar(2) - FieldScalar::tau());
    for (int d : g.degree) CHECK(d == 9);
    CHECK(edge_graph_serial(s).edges == g.edges);
}

TEST_CASE("facets of the 24-cell: 24 octahedra, oracle agreement") {
    PointSet t = named::quaternion_set("T");
    FacetList f = facets(t);
    CHECK(f.size() == 24);
    for (const auto& c : f.facets) CHECK(c.size() == 6);
    CHECK(facets_serial(t).facets == f.facets);
    CHECK(brute_facets(t).facets == f.facets);
    CHECK(ridges_manifold(t, f));
}

TEST_CASE("facets of a random 4-simplex: 5 cells, oracle agreement") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Quaternion> v;
        for (int i = 0; i < 5; ++i) v.push_back(testutil::random_quaternion(rng));
        PointSet ps(v);
        if (ps.size() < 5 || affine_rank(ps) < 5) continue;
        FacetList f = facets(ps);
        CHECK(f.size() == 5);
        for (const auto& c : f.facets) CHECK(c.size() == 4);
        CHECK(brute_facets(ps).facets == f.facets);
        CHECK(facets_serial(ps).facets == f.facets);
    }
}

TEST_CASE("brute oracle guard and span preconditions") {
    PointSet s = named::quaternion_set("S");
    CHECK_THROWS(brute_facets(s));  // 96 > 30 without override
    // 8 cube-like points in a 3-flat: rejected by both
    FieldScalar h = FieldScalar::rational(1, 2);
    std::vector<Quaternion> cube3;
    for (int m = 0; m < 8; ++m)
        cube3.emplace_back(FieldScalar(0), FieldScalar(m & 1 ? 1 : -1) * h,
                           FieldScalar(m & 2 ? 1 : -1) * h, FieldScalar(m & 4 ? 1 : -1) * h);
    PointSet flat(cube3);
    CHECK(affine_rank(flat) == 4);  // affine 3-flat
    CHECK_THROWS(facets(flat));
    CHECK_THROWS(brute_facets(flat));
}

TEST_CASE("24-cell census under W(D4): one orbit of 24 octahedral cells") {
    PointSet t = named::quaternion_set("T");
    FacetList f = facets(t);
    auto recs = cell_census(t, f, named::group("W_D4"));
    for (const auto& r : recs) {
        CHECK(r.vertex_indices.size() == 6);
        CHECK(r.shape == ShapeTag::Other);  // octahedron carries no named tag
        CHECK(r.stabilizer_order == 8);     // orbit-stabilizer: 192/8 = 24
    }
    // the group acting must preserve the set
    CHECK_THROWS(cell_census(named::quaternion_set("V0"), facets_serial(named::quaternion_set("V0")),
                             named::group("snub_group")));
}

TEST_CASE("600-cell: 120 vertices, 720 edges, 600 tetrahedral cells") {
    PointSet icosians = named::quaternion_set("I");
    EdgeGraph g = edge_graph(icosians);
    CHECK(g.edges.size() == 720);
    for (int d : g.degree) CHECK(d == 12);
    FacetList f = facets(icosians);
    CHECK(f.size() == 600);
    for (const auto& c : f.facets) CHECK(c.size() == 4);
    CHECK(ridges_manifold(icosians, f));
}

TEST_CASE("pointwise stabilizer of 1 in the snub group is the pyritohedral form") {
    // [p,q] or [p,q]* fixes 1 exactly when q = pbar
    Group st = stabilizer(named::group("snub_group"), Quaternion::one());
    CHECK(st == named::pyritohedral_4d());
}

TEST_CASE("scheduling independence: 1, 2 and 4 workers give identical facets") {
    PointSet s = named::quaternion_set("S");
    FacetList f1 = facets(s, {.threads = 1});
    FacetList f2 = facets(s, {.threads = 2});
    FacetList f4 = facets(s, {.threads = 4});
    CHECK(f1.facets == f2.facets);
    CHECK(f2.facets == f4.facets);
    CHECK(f1.size() == 144);
}
