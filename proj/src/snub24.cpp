#include "quatpoly/snub24.hpp"

#include <algorithm>
#include <stdexcept>

#include "quatpoly/named.hpp"

namespace qp {

std::vector<int> Snub24::cells_at(int vertex_index) const {
    std::vector<int> out;
    for (size_t i = 0; i < poly.census.size(); ++i) {
        const auto& vi = poly.census[i].vertex_indices;
        if (std::binary_search(vi.begin(), vi.end(), vertex_index)) out.push_back(static_cast<int>(i));
    }
    return out;
}

Snub24 build_snub24(int threads) {
    Snub24 s;
    s.group = &named::group("snub_group");
    s.seed = named::snub_seed();
    s.poly = build_polytope(orbit(*s.group, s.seed), *s.group, threads);
    return s;
}

Vec3 pbasis_coords(const Quaternion& v, const Quaternion& x) {
    return {quat_dot(x, Quaternion::e1() * v), quat_dot(x, Quaternion::e2() * v),
            quat_dot(x, Quaternion::e3() * v)};
}

FieldScalar pbasis_p0(const Quaternion& v, const Quaternion& x) { return quat_dot(x, v); }

TetsAtVertex tetrahedra_at_vertex(const Snub24& s, const Quaternion& vertex) {
    if (!s.poly.vertices.contains(vertex))
        throw std::invalid_argument("tetrahedra_at_vertex: vertex not in the snub 24-cell");
    auto r = named::d4().reflections();
    auto rr = [&](int i, int j) { return r[i - 1] * r[j - 1]; };
    // word table at the seed; the third word of P(5) is r1 r3 (the word
    // r1 r1 is the identity and would degenerate the tetrahedron)
    const std::array<std::array<GroupElement, 3>, 5> words = {{
        {rr(1, 3), rr(3, 4), rr(4, 1)},
        {rr(2, 1), rr(2, 3), rr(2, 4)},
        {rr(3, 2), rr(3, 1), rr(3, 4)},
        {rr(4, 2), rr(4, 3), rr(4, 1)},
        {rr(1, 2), rr(1, 3), rr(1, 4)},
    }};
    // transport: first group element carrying the seed to the vertex
    const GroupElement* carry = nullptr;
    for (const auto& g : *s.group)
        if (g.apply(s.seed) == vertex) { carry = &g; break; }
    if (!carry) throw std::logic_error("tetrahedra_at_vertex: vertex not on the seed orbit");
    TetsAtVertex out;
    out.resolved_word = "P(5) = (L, r1r2 L, r1r3 L, r1r4 L); third word resolved from the degenerate r1r1";
    for (int k = 0; k < 5; ++k) {
        out.tets[k][0] = vertex;
        for (int t = 0; t < 3; ++t) out.tets[k][t + 1] = carry->apply(words[k][t].apply(s.seed));
    }
    return out;
}

namespace {

enum class CellClass { Ico, Td, S3 };

CellClass class_of(const CellRecord& r) {
    if (r.shape == ShapeTag::Icosahedron && r.stabilizer_order == 24) return CellClass::Ico;
    if (r.shape == ShapeTag::Tetrahedron && r.stabilizer_order == 24) return CellClass::Td;
    if (r.shape == ShapeTag::Tetrahedron && r.stabilizer_order == 6) return CellClass::S3;
    throw std::invalid_argument("dual_snub24: census does not match the snub 24-cell");
}

}  // namespace

DualPolytope dual_snub24(const Snub24& s) {
    if (s.poly.census.size() != 144)
        throw std::invalid_argument("dual_snub24: expected the 144-cell census");
    const Quaternion& v0 = s.seed;
    const int v0i = s.poly.vertices.index_of(v0);

    // representative incident cell of each class
    const CellRecord *rep_ico = nullptr, *rep_td = nullptr, *rep_s3 = nullptr;
    for (int ci : s.cells_at(v0i)) {
        const CellRecord& r = s.poly.census[ci];
        switch (class_of(r)) {
            case CellClass::Ico: rep_ico = &r; break;
            case CellClass::Td: rep_td = &r; break;
            case CellClass::S3: rep_s3 = &r; break;
        }
    }
    if (!rep_ico || !rep_td || !rep_s3)
        throw std::invalid_argument("dual_snub24: seed vertex misses a cell class");

    DualPolytope d;
    // normalization: the T_d-tetrahedron center becomes the unit omega_2/sqrt2
    auto len = field_sqrt(rep_td->centroid.norm2());
    if (!len) throw std::logic_error("dual_snub24: centroid length not in the field");
    d.scale_td = len->inverse();
    d.common_projection = quat_dot(rep_td->centroid * d.scale_td, v0);
    d.scale_ico = d.common_projection / quat_dot(rep_ico->centroid, v0);
    d.scale_s3 = d.common_projection / quat_dot(rep_s3->centroid, v0);

    std::vector<Quaternion> dual_vertices;
    dual_vertices.reserve(144);
    std::vector<Quaternion> rescaled(144);
    for (size_t i = 0; i < s.poly.census.size(); ++i) {
        const CellRecord& r = s.poly.census[i];
        FieldScalar sc = class_of(r) == CellClass::Ico ? d.scale_ico
                       : class_of(r) == CellClass::Td ? d.scale_td : d.scale_s3;
        rescaled[i] = r.centroid * sc;
        dual_vertices.push_back(rescaled[i]);
    }
    d.vertices = PointSet(std::move(dual_vertices));

    // one dual cell per original vertex: the rescaled centers of its 8 cells;
    // the coplanarity condition must hold at every vertex
    for (int vi = 0; vi < s.poly.vertices.size(); ++vi) {
        std::vector<int> cell;
        for (int ci : s.cells_at(vi)) {
            const Quaternion& c = rescaled[ci];
            if (quat_dot(c, s.poly.vertices[vi]) != d.common_projection)
                throw std::logic_error("dual_snub24: rescaled centers not coplanar at a vertex");
            cell.push_back(d.vertices.index_of(c));
        }
        std::sort(cell.begin(), cell.end());
        if (cell.size() != 8) throw std::logic_error("dual_snub24: vertex not in exactly 8 cells");
        d.cells.push_back(std::move(cell));
    }
    return d;
}

DualCell dual_cell_at(const Snub24& s, const DualPolytope& dual, const Quaternion& vertex) {
    int vi = s.poly.vertices.index_of(vertex);
    if (vi < 0) throw std::invalid_argument("dual_cell_at: vertex not in the snub 24-cell");
    DualCell out;
    out.vertex = vertex;
    out.common_projection = dual.common_projection;
    for (int idx : dual.cells[vi]) out.centers.push_back(dual.vertices[idx]);
    for (const auto& c : out.centers) out.triples.push_back(pbasis_coords(vertex, c));
    out.solid = hull3d(out.triples);
    // the vertex stabilizer is the cell's dihedral symmetry
    Group st = stabilizer(*s.group, vertex);
    PointSet centers(out.centers);
    for (const auto& g : st)
        if (apply_to_set(g, centers) != centers)
            throw std::logic_error("dual_cell_at: stabilizer does not preserve the cell");
    out.symmetry_order = st.order();
    return out;
}

VertexFigure vertex_figure(const Snub24& s, const Quaternion& vertex) {
    int vi = s.poly.vertices.index_of(vertex);
    if (vi < 0) throw std::invalid_argument("vertex_figure: vertex not in the snub 24-cell");
    VertexFigure vf;
    vf.vertex = vertex;
    for (int j : s.poly.edges.neighbors(vi)) vf.neighbors.push_back(s.poly.vertices[j]);
    std::sort(vf.neighbors.begin(), vf.neighbors.end());
    vf.common_projection = pbasis_p0(vertex, vf.neighbors.at(0));
    for (const auto& nb : vf.neighbors) {
        if (pbasis_p0(vertex, nb) != vf.common_projection)
            throw std::logic_error("vertex_figure: neighbors not equidistant from the axis");
        vf.points.push_back(pbasis_coords(vertex, nb));
    }
    vf.solid = hull3d(vf.points);
    return vf;
}

std::vector<Vec3> vertex_figure_completion(const VertexFigure& vf) {
    // the vertex figure is an icosahedron minus three vertices; recover them
    // as the antipodes (through the icosahedron center) of figure points.
    // center = average of any antipodal pair; for J63 the centroid of the 12
    // completed points equals the projection of the icosahedron center, which
    // is 0 here because the 9 points already contain 3 antipodal pairs.
    std::vector<Vec3> missing;
    auto have = [&vf](const Vec3& p) {
        return std::find(vf.points.begin(), vf.points.end(), p) != vf.points.end();
    };
    for (const auto& p : vf.points)
        if (!have(-p)) missing.push_back(-p);
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    return missing;
}

CubeReport cube_check_f4() {
    const auto& f4 = named::f4();
    const FieldScalar tau = FieldScalar::tau(), sig = FieldScalar::sigma();
    Quaternion lam = dynkin_to_cartesian({0, 0, tau, FieldScalar(1)}, f4) *
                     (sig * sig * FieldScalar::rational(1, 2));
    PointSet cube = orbit(named::group("W_B3"), lam);
    if (cube.size() != 8) throw std::logic_error("cube_check_f4: orbit size != 8");

    const FieldScalar r = FieldScalar::inv_sqrt2();
    const Quaternion p0(r, r, 0, 0);  // unit (1 + e1)/sqrt2, the cube center direction
    CubeReport out;
    out.common_p0 = tau * tau * FieldScalar::rational(1, 2) * r;
    out.ignored_factor = sig * FieldScalar::rational(1, 2) * r;
    FieldScalar inv = out.ignored_factor.inverse();
    for (const auto& v : cube) {
        if (pbasis_p0(p0, v) != out.common_p0)
            throw std::logic_error("cube_check_f4: p0 components differ");
        out.points.push_back(v);
        Vec3 t = pbasis_coords(p0, v);
        out.triples.push_back({t[0] * inv, t[1] * inv, t[2] * inv});
    }
    // the two inscribed regular tetrahedra split by the sign parity
    for (int i = 0; i < 8; ++i) {
        int neg = 0;
        for (int k = 0; k < 3; ++k)
            if (out.triples[i][k].sign() < 0) ++neg;
        out.tetrahedra[neg % 2].push_back(i);
    }
    return out;
}

}  // namespace qp
