#pragma once

#include <array>
#include <string>

#include "quatpoly/polytope.hpp"
#include "quatpoly/solid3.hpp"

namespace qp {

/// Snub 24-cell bundle: the order-576 chiral group, the 96 vertices with
/// edge graph, 144 cells and their census, and the seed vertex.
struct Snub24 {
    const Group* group;   // named snub_group, order 576
    Polytope poly;
    Quaternion seed;      // (tau + e1 + sigma e3)/2

    const CellRecord& cell(int i) const { return poly.census[i]; }
    /// census indices of the cells containing a vertex index
    std::vector<int> cells_at(int vertex_index) const;
};

Snub24 build_snub24(int threads = 0);

/// Orthonormal basis (p0 = v, p_i = e_i p0) coordinates of x with the p0
/// component dropped; v must be a unit quaternion.
Vec3 pbasis_coords(const Quaternion& v, const Quaternion& x);
FieldScalar pbasis_p0(const Quaternion& v, const Quaternion& x);

/// The five tetrahedra sharing a vertex, built from the rotation words at
/// the seed and transported by group symmetry. The degenerate word in the
/// third slot of P(5) is resolved to r1 r3; the resolution is recorded in
/// `resolved_word`, not silently substituted.
struct TetsAtVertex {
    std::array<std::array<Quaternion, 4>, 5> tets;   // P(1)..P(5)
    std::string resolved_word;
};
TetsAtVertex tetrahedra_at_vertex(const Snub24& s, const Quaternion& vertex);

/// Dual of the snub 24-cell: 144 rescaled cell centers as vertices, one
/// 8-vertex cell per original vertex. Class rescaling constants are solved
/// from the coplanarity condition (equal projection onto the base vertex).
struct DualPolytope {
    PointSet vertices;                      // 144
    std::vector<std::vector<int>> cells;    // 96 cells, 8 indices each
    FieldScalar scale_ico, scale_td, scale_s3;
    FieldScalar common_projection;          // dot(rescaled center, incident vertex)
};
DualPolytope dual_snub24(const Snub24& s);

/// One dual cell in the hyperplane orthogonal to its vertex.
struct DualCell {
    Quaternion vertex;
    std::vector<Quaternion> centers;        // the 8 rescaled incident cell centers
    FieldScalar common_projection;
    std::vector<Vec3> triples;              // p-basis coordinates, p0 dropped
    Solid3 solid;                           // 3D hull: 3 kites + 6 isosceles triangles
    int symmetry_order = 0;                 // vertex stabilizer preserving the cell (D3: 6)
};
DualCell dual_cell_at(const Snub24& s, const DualPolytope& dual, const Quaternion& vertex);

/// Vertex figure: the 9 nearest neighbors in the p-basis of the vertex.
struct VertexFigure {
    Quaternion vertex;
    std::vector<Quaternion> neighbors;      // 9, canonical order
    FieldScalar common_projection;          // dot(neighbor, vertex) = tau/2
    std::vector<Vec3> points;               // 3D coordinates, p0 dropped
    Solid3 solid;                           // J63: 9V / 15E / 8F
};
VertexFigure vertex_figure(const Snub24& s, const Quaternion& vertex);

/// The three imaginary-space points completing the vertex figure to a
/// regular icosahedron.
std::vector<Vec3> vertex_figure_completion(const VertexFigure& vf);

/// The <r1,r2,r3> cube of the F4 polytope: 8 orbit points, rebased +-1
/// coordinate triples, and the two inscribed dual regular tetrahedra.
struct CubeReport {
    std::vector<Quaternion> points;          // canonical order, 8
    std::vector<Vec3> triples;               // aligned with points; entries +-1
    FieldScalar common_p0;                   // tau^2/(2 sqrt2)
    FieldScalar ignored_factor;              // sigma/(2 sqrt2)
    std::array<std::vector<int>, 2> tetrahedra;  // index split by sign parity
};
CubeReport cube_check_f4();

}  // namespace qp
