#include "quatpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "quatpoly/named.hpp"
#include "quatpoly/project3d.hpp"
#include "quatpoly/snub24.hpp"

namespace qp {

namespace {

using Tag = PolygonClass::Tag;

FieldScalar half() { return FieldScalar::rational(1, 2); }

// Lazily built shared state. With corrupt_root set, the D4-derived groups are
// regenerated from a perturbed root list (negative-path fixture).
struct Context {
    int threads = 0;
    bool corrupt = false;

    std::optional<RootSystemData> d4_;
    std::optional<Group> w_d4_, rot_d4_, snub_group_;
    std::optional<Snub24> snub_;
    std::optional<DualPolytope> dual_;
    std::optional<Polytope> f4_poly_;
    double snub_facet_seconds = -1, f4_facet_seconds = -1;

    const RootSystemData& d4() {
        if (!d4_) {
            auto roots = named::d4().roots;
            // fixture: e2 instead of e2 - e3 turns the diagram into B4 (order 384)
            if (corrupt) roots[0] = Quaternion::e2();
            d4_ = RootSystemData::from_roots(roots);
        }
        return *d4_;
    }
    const Group& w_d4() {
        if (!w_d4_) w_d4_ = Group::generate(d4().reflections(), 384, "W_D4");
        return *w_d4_;
    }
    const Group& rot_d4() {
        if (!rot_d4_) {
            std::vector<GroupElement> gens;
            auto r = d4().reflections();
            for (size_t i = 0; i < r.size(); ++i)
                for (size_t j = 0; j < r.size(); ++j)
                    if (i != j) gens.push_back(r[i] * r[j]);
            rot_d4_ = Group::generate(gens, 192, "rot_D4");
        }
        return *rot_d4_;
    }
    const Group& snub_group() {
        if (!snub_group_) {
            std::vector<GroupElement> gens;
            auto r = d4().reflections();
            for (size_t i = 0; i < r.size(); ++i)
                for (size_t j = 0; j < r.size(); ++j)
                    if (i != j) gens.push_back(r[i] * r[j]);
            gens.emplace_back(Quaternion(half(), -half(), half(), -half()),
                              Quaternion(half(), half(), half(), half()), false);
            gens.emplace_back(Quaternion::e2(), -Quaternion::e2(), true);
            snub_group_ = Group::generate(gens, 1152, "snub_group");
        }
        return *snub_group_;
    }
    const Snub24& snub() {
        if (!snub_) {
            Snub24 s;
            s.group = &snub_group();
            s.seed = named::snub_seed();
            s.poly.vertices = orbit(*s.group, s.seed);
            s.poly.edges = edge_graph(s.poly.vertices, threads);
            auto t0 = std::chrono::steady_clock::now();
            s.poly.cells = facets(s.poly.vertices, {threads});
            snub_facet_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            s.poly.census = cell_census(s.poly.vertices, s.poly.cells, *s.group, threads);
            snub_ = std::move(s);
        }
        return *snub_;
    }
    const DualPolytope& dual() {
        if (!dual_) dual_ = dual_snub24(snub());
        return *dual_;
    }
    const Polytope& f4_poly() {
        if (!f4_poly_) {
            Polytope p;
            p.vertices = orbit(named::group("W_F4"), named::snub_seed_mirror());
            p.edges = edge_graph(p.vertices, threads);
            auto t0 = std::chrono::steady_clock::now();
            p.cells = facets(p.vertices, {threads});
            f4_facet_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            p.census = cell_census(p.vertices, p.cells, named::group("W_F4"), threads);
            f4_poly_ = std::move(p);
        }
        return *f4_poly_;
    }
};

struct Check {
    std::string id, scope;
    std::function<void(Context&, CheckResult&)> fn;
};

void expect_int(CheckResult& r, long expected, long actual) {
    r.expected = std::to_string(expected);
    r.actual = std::to_string(actual);
    r.pass = expected == actual;
}

void expect_true(CheckResult& r, bool ok, const std::string& expected,
                 const std::string& actual_on_fail = "violated") {
    r.expected = expected;
    r.actual = ok ? expected : actual_on_fail;
    r.pass = ok;
}

// order check with a fresh timed closure (generation is the thing measured)
void expect_order(CheckResult& r, long expected, double budget_s,
                  const std::function<Group()>& build) {
    auto t0 = std::chrono::steady_clock::now();
    Group g = build();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d in %.2f s", g.order(), dt);
    r.expected = std::to_string(expected) + " in < " + std::to_string(static_cast<int>(budget_s)) + " s";
    r.actual = buf;
    r.pass = g.order() == expected && dt < budget_s;
}

std::mt19937_64 fresh_rng() { return std::mt19937_64(0x5EEDC0DE); }

FieldScalar random_field(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    auto q = [&] { return make_rational(num(rng), den(rng)); };
    return {q(), q(), q(), q()};
}

const std::vector<Check>& checks() {
    static const std::vector<Check> all = [] {
        std::vector<Check> v;
        auto add = [&v](std::string id, std::string scope,
                        std::function<void(Context&, CheckResult&)> fn) {
            v.push_back({std::move(id), std::move(scope), std::move(fn)});
        };

        // ---- group orders ----
        add("order/W_A3", "coxeter", [](Context&, CheckResult& r) {
            expect_order(r, 24, 1.0,
                         [] { return Group::generate(named::a3().reflections(), 48, "W_A3"); });
        });
        add("order/rot_A3", "coxeter", [](Context&, CheckResult& r) {
            expect_order(r, 12, 1.0, [] {
                auto rf = named::a3().reflections();
                std::vector<GroupElement> gens;
                for (size_t i = 0; i < rf.size(); ++i)
                    for (size_t j = 0; j < rf.size(); ++j)
                        if (i != j) gens.push_back(rf[i] * rf[j]);
                return Group::generate(gens, 24, "rot_A3");
            });
        });
        add("order/W_D4", "coxeter", [](Context& c, CheckResult& r) {
            expect_order(r, 192, 1.0,
                         [&c] { return Group::generate(c.d4().reflections(), 384, "W_D4"); });
        });
        add("order/rot_D4", "coxeter", [](Context& c, CheckResult& r) {
            expect_order(r, 96, 1.0, [&c] { return c.rot_d4(); });
        });
        add("order/snub_group", "coxeter", [](Context& c, CheckResult& r) {
            expect_order(r, 576, 1.0, [&c] { return c.snub_group(); });
        });
        add("order/W_B3", "coxeter", [](Context&, CheckResult& r) {
            expect_order(r, 48, 1.0, [] {
                auto rf = named::f4().reflections();
                return Group::generate({rf[0], rf[1], rf[2]}, 96, "W_B3");
            });
        });
        add("order/W_F4", "coxeter", [](Context&, CheckResult& r) {
            expect_order(r, 1152, 1.0,
                         [] { return Group::generate(named::f4().reflections(), 2304, "W_F4"); });
        });
        add("order/W_H4", "coxeter", [](Context&, CheckResult& r) {
            // closure from five generators; budget 30 s
            expect_order(r, 14400, 30.0, [] { return named::group("W_H4"); });
        });

        // ---- set decompositions ----
        add("decomp/W_D4-six-blocks", "coxeter", [](Context& c, CheckResult& r) {
            expect_true(r, named::d4_pair_set() == c.w_d4(), "W(D4) = [V0,V0]+[V+,V-]+[V-,V+]+[Vi,Vi]*");
        });
        add("decomp/snub-TT-blocks", "coxeter", [](Context& c, CheckResult& r) {
            expect_true(r, named::snub_pair_set() == c.snub_group(), "snub group = [T,T]+[T,T]*");
        });
        add("decomp/W_F4-four-blocks", "coxeter", [](Context&, CheckResult& r) {
            expect_true(r, named::f4_pair_set() == named::group("W_F4"),
                        "W(F4) = [T,T]+[T,T]*+[T',T']+[T',T']*");
        });

        // ---- the snub 24-cell vertex set ----
        add("snub24/orbit-is-96-point-list", "coxeter", [](Context& c, CheckResult& r) {
            PointSet s = orbit(c.snub_group(), named::snub_seed());
            expect_true(r, s.size() == 96 && s == named::quaternion_set("S"),
                        "orbit = the 96-point list, verbatim");
        });
        add("snub24/mirror-is-tau-sigma-swap", "coxeter", [](Context& c, CheckResult& r) {
            PointSet sm = orbit(c.snub_group(), named::snub_seed_mirror());
            expect_true(r, sm == named::quaternion_set("S").galois_sqrt5(),
                        "mirror orbit = S with tau <-> sigma");
        });
        add("snub24/r1-maps-S-to-mirror", "coxeter", [](Context& c, CheckResult& r) {
            auto r1 = reflection_from_root(c.d4().roots[0]);
            expect_true(r,
                        mirror_check(named::quaternion_set("S"), named::quaternion_set("Stilde"), r1),
                        "r1 S = S~");
        });

        // ---- cell census of S ----
        add("census/snub24-144-cells", "polytope", [](Context& c, CheckResult& r) {
            int n = c.snub().poly.cells.size();
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%d cells in %.2f s", n, c.snub_facet_seconds);
            r.expected = "144 cells in < 60 s";
            r.actual = buf;
            r.pass = n == 144 && c.snub_facet_seconds < 60.0;
        });
        add("census/snub24-class-counts", "polytope", [](Context& c, CheckResult& r) {
            std::map<std::pair<std::string, int>, int> counts;
            for (const auto& rec : c.snub().poly.census)
                counts[{shape_name(rec.shape), rec.stabilizer_order}]++;
            bool ok = counts.size() == 3 && counts[{"icosahedron", 24}] == 24 &&
                      counts[{"tetrahedron", 24}] == 24 && counts[{"tetrahedron", 6}] == 96;
            std::ostringstream act;
            for (const auto& [k, n] : counts) act << k.first << "/stab" << k.second << ":" << n << " ";
            r.expected = "icosahedron/stab24:24 tetrahedron/stab24:24 tetrahedron/stab6:96";
            r.actual = act.str();
            r.pass = ok;
        });
        add("census/vertex-in-3-icosa-5-tets", "polytope", [](Context& c, CheckResult& r) {
            const auto& s = c.snub();
            bool ok = true;
            for (int vi = 0; vi < s.poly.vertices.size() && ok; ++vi) {
                int ico = 0, tet = 0;
                for (int ci : s.cells_at(vi))
                    (s.poly.census[ci].shape == ShapeTag::Icosahedron ? ico : tet)++;
                ok = ico == 3 && tet == 5;
            }
            expect_true(r, ok, "every vertex in 3 icosahedra + 5 tetrahedra");
        });
        add("oracle/24cell-brute-agreement", "polytope", [](Context& c, CheckResult& r) {
            PointSet t = named::quaternion_set("T");
            FacetList f = facets(t, {c.threads});
            bool octs = f.size() == 24;
            for (const auto& cell : f.facets) octs = octs && cell.size() == 6;
            expect_true(r, octs && f.facets == brute_facets(t).facets,
                        "24 octahedra, gift-wrapping = brute force");
        });
        add("oracle/random-simplex-brute-agreement", "polytope", [](Context& c, CheckResult& r) {
            auto rng = fresh_rng();
            PointSet ps;
            do {
                std::vector<Quaternion> pts;
                for (int i = 0; i < 5; ++i)
                    pts.emplace_back(random_field(rng), random_field(rng), random_field(rng),
                                     random_field(rng));
                ps = PointSet(pts);
            } while (ps.size() < 5 || affine_rank(ps) < 5);
            FacetList f = facets(ps, {c.threads});
            expect_true(r, f.size() == 5 && f.facets == brute_facets(ps).facets,
                        "5 facets, gift-wrapping = brute force");
        });

        // ---- the dual polytope ----
        add("dual/144-vertices-96-cells", "polytope", [](Context& c, CheckResult& r) {
            const auto& d = c.dual();
            expect_true(r, d.vertices.size() == 144 && d.cells.size() == 96, "144 vertices, 96 cells");
        });
        add("dual/cell-coordinate-triples", "polytope", [](Context& c, CheckResult& r) {
            DualCell dc = dual_cell_at(c.snub(), c.dual(), c.snub().seed);
            const FieldScalar tau = FieldScalar::tau(), sig = FieldScalar::sigma();
            const FieldScalar k = half() * FieldScalar::inv_sqrt2(), z(0), s2 = sig * sig;
            std::vector<Vec3> expect = {{-tau * k, z, k},      {z, -k, -tau * k},
                                        {k, tau * k, z},       {-sig * k, sig * k, -sig * k},
                                        {sig * k, -sig * k, sig * k}, {s2 * k, z, k},
                                        {k, -s2 * k, z},       {z, -k, s2 * k}};
            auto srt = [](std::vector<Vec3> v) { std::sort(v.begin(), v.end()); return v; };
            expect_true(r, srt(dc.triples) == srt(expect),
                        "the eight reference triples (D3-consistent signs)");
        });
        add("dual/cell-faces-3-kites-6-isosceles", "polytope", [](Context& c, CheckResult& r) {
            DualCell dc = dual_cell_at(c.snub(), c.dual(), c.snub().seed);
            dc.solid.validate();
            auto census = dc.solid.face_census();
            bool ok = census.size() == 2 && census[Tag::Kite] == 3 && census[Tag::IsoscelesTriangle] == 6;
            const FieldScalar s4 = FieldScalar::sigma() * FieldScalar::sigma() * FieldScalar::sigma() *
                                   FieldScalar::sigma() * half();
            const FieldScalar t2 = FieldScalar::tau() * FieldScalar::tau() * half();
            for (const auto& pc : dc.solid.classify_faces()) {
                auto d2 = pc.distinct_len2();
                ok = ok && d2.size() == 2;
                if (!ok) break;
                if (pc.tag == Tag::Kite)
                    ok = d2[0] == s4 && d2[1] == half();
                else
                    ok = d2[0] == half() && d2[1] == t2;
            }
            expect_true(r, ok, "3 kites {s^2/r2, 1/r2} + 6 isosceles {tau/r2, 1/r2}");
        });

        // ---- the vertex figure ----
        add("vertex-figure/nine-nearest", "polytope", [](Context& c, CheckResult& r) {
            VertexFigure vf = vertex_figure(c.snub(), c.snub().seed);
            const FieldScalar sig = FieldScalar::sigma(), h = half(), z(0);
            std::vector<Vec3> expect = {{h, z, sig * h},   {-h, z, sig * h},  {h, z, -sig * h},
                                        {sig * h, h, z},   {sig * h, -h, z},  {z, sig * h, h},
                                        {-sig * h, -h, z}, {z, -sig * h, h},  {z, -sig * h, -h}};
            auto srt = [](std::vector<Vec3> v) { std::sort(v.begin(), v.end()); return v; };
            expect_true(r,
                        vf.neighbors.size() == 9 && vf.common_projection == FieldScalar::tau() * h &&
                            srt(vf.points) == srt(expect),
                        "9 nearest at projection tau/2 with the reference coordinates");
        });
        add("vertex-figure/J63-hull", "polytope", [](Context& c, CheckResult& r) {
            VertexFigure vf = vertex_figure(c.snub(), c.snub().seed);
            vf.solid.validate();
            auto cc = vf.solid.face_census();
            int tri = cc[Tag::EquilateralTriangle] + cc[Tag::IsoscelesTriangle];
            expect_true(r,
                        vf.solid.vertices.size() == 9 && vf.solid.edge_count() == 15 &&
                            vf.solid.faces.size() == 8 && tri == 5 && cc[Tag::Pentagon] == 3,
                        "9V / 15E / 8F: 5 triangles + 3 pentagons");
        });
        add("vertex-figure/icosahedron-completion", "polytope", [](Context& c, CheckResult& r) {
            VertexFigure vf = vertex_figure(c.snub(), c.snub().seed);
            auto missing = vertex_figure_completion(vf);
            std::vector<Vec3> twelve = vf.points;
            twelve.insert(twelve.end(), missing.begin(), missing.end());
            Solid3 ico = hull3d(twelve);
            ico.validate();
            auto cc = ico.face_census();
            expect_true(r,
                        missing.size() == 3 && ico.vertices.size() == 12 && ico.edge_count() == 30 &&
                            cc[Tag::EquilateralTriangle] == 20,
                        "three added points complete a regular icosahedron");
        });

        // ---- the F4 union polytope ----
        add("f4/orbit-is-S-union-mirror", "polytope", [](Context&, CheckResult& r) {
            // orbit of the Dynkin-basis vector (0,0,tau,1) scaled by sigma^2/2
            Quaternion seed = dynkin_to_cartesian({0, 0, FieldScalar::tau(), FieldScalar(1)},
                                                  named::f4()) *
                              (FieldScalar::sigma() * FieldScalar::sigma() * half());
            PointSet u = orbit(named::group("W_F4"), seed);
            PointSet expect = PointSet::set_union(named::quaternion_set("S"),
                                                  named::quaternion_set("Stilde"));
            expect_true(r, u.size() == 192 && u == expect, "W(F4) sigma^2/2 (0,0,tau,1) = S u S~");
        });
        add("f4/48-cells-24-cubes-24-trunc-oct", "polytope", [](Context& c, CheckResult& r) {
            std::map<std::string, int> counts;
            for (const auto& rec : c.f4_poly().census) counts[shape_name(rec.shape)]++;
            bool ok = c.f4_poly().cells.size() == 48 && counts["cube"] == 24 &&
                      counts["truncated-octahedron"] == 24 && c.f4_facet_seconds < 600.0;
            std::ostringstream act;
            act << c.f4_poly().cells.size() << " cells:";
            for (auto& [k, n] : counts) act << " " << k << ":" << n;
            act << " (facets in " << static_cast<int>(c.f4_facet_seconds) << " s)";
            r.expected = "48 cells: cube:24 truncated-octahedron:24, facets in < 600 s";
            r.actual = act.str();
            r.pass = ok;
        });
        add("f4/vertex-in-1-cube-3-trunc-oct", "polytope", [](Context& c, CheckResult& r) {
            const auto& p = c.f4_poly();
            bool ok = true;
            for (int vi = 0; vi < p.vertices.size() && ok; ++vi) {
                int cubes = 0, tos = 0;
                for (const auto& rec : p.census)
                    if (std::binary_search(rec.vertex_indices.begin(), rec.vertex_indices.end(), vi))
                        (rec.shape == ShapeTag::Cube ? cubes : tos)++;
                ok = cubes == 1 && tos == 3;
            }
            expect_true(r, ok, "every vertex in 1 cube + 3 truncated octahedra");
        });
        add("f4/cube-orbit-eight-vertices", "polytope", [](Context&, CheckResult& r) {
            CubeReport cr = cube_check_f4();
            const FieldScalar tau = FieldScalar::tau(), sig = FieldScalar::sigma(), h = half(), z(0);
            std::vector<Quaternion> expect;
            for (int s1 : {-1, 1}) {
                expect.emplace_back(tau * h, h, FieldScalar(s1) * sig * h, z);
                expect.emplace_back(h, tau * h, z, FieldScalar(s1) * sig * h);
                expect.emplace_back(tau * h, h, z, FieldScalar(s1) * sig * h);
                expect.emplace_back(h, tau * h, FieldScalar(s1) * sig * h, z);
            }
            std::sort(expect.begin(), expect.end());
            std::vector<Quaternion> got = cr.points;
            std::sort(got.begin(), got.end());
            expect_true(r, got == expect, "the eight reference cube vertices");
        });
        add("f4/cube-rebased-pm1-triples", "polytope", [](Context&, CheckResult& r) {
            CubeReport cr = cube_check_f4();
            std::vector<Vec3> pm;
            for (int m = 0; m < 8; ++m)
                pm.emplace_back(FieldScalar(m & 1 ? -1 : 1), FieldScalar(m & 2 ? -1 : 1),
                                FieldScalar(m & 4 ? -1 : 1));
            auto srt = [](std::vector<Vec3> v) { std::sort(v.begin(), v.end()); return v; };
            bool ok = srt(cr.triples) == srt(pm) &&
                      cr.common_p0 == FieldScalar::tau() * FieldScalar::tau() * half() *
                                          FieldScalar::inv_sqrt2();
            // the two parity classes are dual regular tetrahedra
            for (const auto& tet : cr.tetrahedra) {
                ok = ok && tet.size() == 4;
                if (!ok) break;
                FieldScalar e2 = (cr.points[tet[0]] - cr.points[tet[1]]).norm2();
                for (size_t a = 0; a < 4; ++a)
                    for (size_t b = a + 1; b < 4; ++b)
                        ok = ok && (cr.points[tet[a]] - cr.points[tet[b]]).norm2() == e2;
            }
            expect_true(r, ok, "+-1 triples (set) and two inscribed dual regular tetrahedra");
        });

        // ---- chiral icosahedra and the octahedral orbit ----
        add("a3/two-icosahedra-mirrored", "coxeter", [](Context&, CheckResult& r) {
            auto ico = named::construction("icosa-a3").points;
            auto icom = named::construction("icosa-a3-mirror").points;
            Solid3 h1 = hull3d(imaginary_parts(ico));
            Solid3 h2 = hull3d(imaginary_parts(icom));
            bool ok = ico.size() == 12 && icom.size() == 12;
            ok = ok && h1.face_census()[Tag::EquilateralTriangle] == 20 &&
                 h2.face_census()[Tag::EquilateralTriangle] == 20;
            // any W(A3) reflection maps one onto the other: all 6 positive roots
            const auto& a3 = named::a3();
            std::vector<Quaternion> pos = {a3.roots[0],
                                           a3.roots[1],
                                           a3.roots[2],
                                           a3.roots[0] + a3.roots[1],
                                           a3.roots[1] + a3.roots[2],
                                           a3.roots[0] + a3.roots[1] + a3.roots[2]};
            for (const auto& root : pos)
                ok = ok && mirror_check(ico, icom, reflection_from_root(root));
            expect_true(r, ok, "two regular icosahedra exchanged by every W(A3) reflection");
        });
        add("a3/union-is-B3-orbit-rescaled", "coxeter", [](Context&, CheckResult& r) {
            auto u = PointSet::set_union(named::construction("icosa-a3").points,
                                         named::construction("icosa-a3-mirror").points);
            auto to = named::construction("trunc-oct-b3").points;
            // common normalization fixed by matching minimal edge lengths
            FieldScalar s2u = edge_graph_serial(u).min_dist2;
            FieldScalar s2t = edge_graph_serial(to).min_dist2;
            auto scale = field_sqrt(s2u / s2t);
            bool ok = scale.has_value() && to.scaled(*scale) == u;
            expect_true(r, ok, "union of the icosahedra = W(B3)(1,tau,0) after one exact rescale");
        });
        add("b3/trunc-oct-faces", "project3d", [](Context&, CheckResult& r) {
            auto to = named::construction("trunc-oct-b3").points;
            Solid3 h = hull3d(imaginary_parts(to));
            h.validate();
            auto cc = h.face_census();
            bool ok = cc[Tag::Square] == 6 && cc[Tag::IsogonalHexagon] == 8 && h.faces.size() == 14;
            FieldScalar tau2 = FieldScalar::tau() * FieldScalar::tau();
            for (const auto& pc : h.classify_faces()) {
                if (pc.tag != Tag::IsogonalHexagon) continue;
                auto d2 = pc.distinct_len2();
                ok = ok && d2.size() == 2 && d2[1] == d2[0] * tau2;
            }
            expect_true(r, ok, "6 squares + 8 isogonal hexagons with edge ratio tau");
        });

        // ---- the pyritohedral projection ----
        add("project/partition-class-sizes", "project3d", [](Context&, CheckResult& r) {
            auto classes = partition_by_real_part(named::quaternion_set("S"));
            std::multiset<int> sizes;
            for (const auto& c : classes) sizes.insert(c.points.size());
            bool ok = sizes == std::multiset<int>({12, 12, 12, 12, 12, 12, 24});
            auto orbits = pyritohedral_orbits(named::quaternion_set("S"), named::pyritohedral_4d());
            std::multiset<int> osz;
            for (const auto& o : orbits) osz.insert(o.size());
            ok = ok && osz == std::multiset<int>({12, 12, 12, 12, 12, 12, 24});
            expect_true(r, ok, "classes and pyritohedral orbits of sizes 12x6 + 24");
        });
        add("project/golden-classes-are-icosahedra", "project3d", [](Context&, CheckResult& r) {
            auto classes = partition_by_real_part(named::quaternion_set("S"));
            bool ok = true;
            for (const auto& c : classes) {
                if (c.label != "tau/2" && c.label != "-tau/2" && c.label != "sigma/2" &&
                    c.label != "-sigma/2")
                    continue;
                Solid3 h = hull3d(c.imaginary);
                h.validate();
                ok = ok && h.vertices.size() == 12 && h.faces.size() == 20 &&
                     h.face_census()[Tag::EquilateralTriangle] == 20;
            }
            expect_true(r, ok, "the +-tau/2 and +-sigma/2 classes hull to regular icosahedra");
        });
        add("project/zero-class-face-census", "project3d", [](Context&, CheckResult& r) {
            auto classes = partition_by_real_part(named::quaternion_set("S"));
            const auto& zero = classes.back();
            Solid3 h = hull3d(zero.imaginary);
            h.validate();
            auto cc = h.face_census();
            bool ok = zero.label == "0" && cc[Tag::EquilateralTriangle] == 8 &&
                      cc[Tag::GoldenRectangle] == 6 && cc[Tag::Trapezoid] == 12;
            FieldScalar tau2 = FieldScalar::tau() * FieldScalar::tau();
            for (const auto& pc : h.classify_faces()) {
                if (pc.tag != Tag::Trapezoid) continue;
                auto d2 = pc.distinct_len2();
                ok = ok && d2.size() == 2 && d2[1] == d2[0] * tau2;
            }
            std::ostringstream act;
            for (auto& [tag, n] : cc) act << polygon_tag_name(tag) << ":" << n << " ";
            r.expected = "equilateral-triangle:8 golden-rectangle:6 trapezoid:12, ratio tau";
            r.actual = act.str();
            r.pass = ok;
        });

        // ---- always-on property suites ----
        add("property/sign-float-agreement-1e5", "algebra", [](Context&, CheckResult& r) {
            auto rng = fresh_rng();
            int checked = 0, agreed = 0;
            for (int i = 0; i < 100000; ++i) {
                FieldScalar x = random_field(rng);
                double fx = x.to_double();
                if (std::abs(fx) <= 1e-9) continue;
                ++checked;
                if (x.sign() == (fx > 0 ? 1 : -1)) ++agreed;
            }
            expect_int(r, checked, agreed);
        });
        add("property/reflection-involution", "coxeter", [](Context& c, CheckResult& r) {
            bool ok = true;
            for (const auto* rs : {&c.d4(), &named::a3(), &named::f4(), &named::b3_3d()})
                for (const auto& refl : rs->reflections()) ok = ok && (refl * refl).is_identity();
            expect_true(r, ok, "r * r = identity for every reflection");
        });
        add("property/action-homomorphism", "coxeter", [](Context& c, CheckResult& r) {
            auto rng = fresh_rng();
            const auto& els = c.snub_group().elements();
            std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
            bool ok = true;
            for (int i = 0; i < 200 && ok; ++i) {
                const auto &g = els[pick(rng)], &h = els[pick(rng)];
                Quaternion v(random_field(rng), random_field(rng), random_field(rng),
                             random_field(rng));
                ok = (g * h).apply(v) == g.apply(h.apply(v));
            }
            expect_true(r, ok, "apply(g h, v) = apply(g, apply(h, v))");
        });
        add("property/orbit-stabilizer", "coxeter", [](Context& c, CheckResult& r) {
            const auto& g = c.snub_group();
            bool ok = true;
            for (const auto& seed :
                 {Quaternion::one(), named::snub_seed(),
                  Quaternion(FieldScalar::inv_sqrt2(), FieldScalar::inv_sqrt2(), 0, 0)}) {
                PointSet o = orbit(g, seed);
                Group st = stabilizer(g, seed);
                ok = ok && o.size() * st.order() == g.order();
            }
            expect_true(r, ok, "|orbit| * |stabilizer| = |group|");
        });
        add("property/ridge-manifold", "polytope", [](Context& c, CheckResult& r) {
            expect_true(r, ridges_manifold(c.snub().poly.vertices, c.snub().poly.cells),
                        "every ridge of the snub 24-cell shared by exactly 2 cells");
        });
        add("property/euler-for-solids", "project3d", [](Context& c, CheckResult& r) {
            // every Solid3 produced across the pipeline satisfies V - E + F = 2
            bool ok = true;
            auto euler = [&ok](const Solid3& s) {
                ok = ok && static_cast<int>(s.vertices.size()) - s.edge_count() +
                               static_cast<int>(s.faces.size()) == 2;
            };
            for (const auto& cls : partition_by_real_part(named::quaternion_set("S")))
                euler(hull3d(cls.imaginary));
            euler(hull3d(imaginary_parts(named::construction("trunc-oct-b3").points)));
            euler(hull3d(imaginary_parts(named::construction("icosa-a3").points)));
            euler(vertex_figure(c.snub(), c.snub().seed).solid);
            euler(dual_cell_at(c.snub(), c.dual(), c.snub().seed).solid);
            expect_true(r, ok, "V - E + F = 2 for every produced solid");
        });
        return v;
    }();
    return all;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& check_manifest() {
    static const std::vector<std::pair<std::string, std::string>> m = [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& c : checks()) out.emplace_back(c.id, c.scope);
        return out;
    }();
    return m;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    static const std::set<std::string> scopes = {"all", "algebra", "coxeter", "polytope", "project3d"};
    if (!scopes.count(opt.scope))
        throw std::invalid_argument("run_verification: unknown scope '" + opt.scope + "'");
    Context ctx;
    ctx.threads = opt.threads;
    ctx.corrupt = opt.corrupt_root;
    std::vector<CheckResult> out;
    for (const auto& c : checks()) {
        if (opt.scope != "all" && c.scope != opt.scope) continue;
        CheckResult r;
        r.id = c.id;
        r.scope = c.scope;
        try {
            c.fn(ctx, r);
        } catch (const std::exception& e) {
            if (r.expected.empty()) r.expected = "no error";
            r.actual = std::string("error: ") + e.what();
            r.pass = false;
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace qp
