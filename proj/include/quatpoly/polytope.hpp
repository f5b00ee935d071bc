#pragma once

#include <string>
#include <vector>

#include "quatpoly/facets.hpp"
#include "quatpoly/group.hpp"

namespace qp {

/// Edges = all pairs realizing the exact minimum nonzero squared distance.
struct EdgeGraph {
    std::vector<std::pair<int, int>> edges;   // i < j, sorted
    FieldScalar min_dist2;
    std::vector<int> degree;

    std::vector<int> neighbors(int v) const;
};

/// Exact all-pairs scan; comparisons via the field's exact sign.
/// Throws on fewer than 2 distinct points.
EdgeGraph edge_graph(const PointSet& pts, int threads = 0);
EdgeGraph edge_graph_serial(const PointSet& pts);

enum class ShapeTag { Icosahedron, Tetrahedron, Cube, TruncatedOctahedron, Other };
std::string shape_name(ShapeTag t);

/// Per-facet classification record.
struct CellRecord {
    std::vector<int> vertex_indices;
    ShapeTag shape = ShapeTag::Other;
    int stabilizer_order = 0;
    Quaternion centroid;             // vertex average (not rescaled)
};

/// Classify every facet by exact edge-length multiset and face census, and
/// compute the order of the subgroup mapping it to itself. Throws if the
/// group does not preserve the vertex set.
std::vector<CellRecord> cell_census(const PointSet& pts, const FacetList& cells,
                                    const Group& group, int threads = 0);

/// (shape, stabilizer order) -> count
std::vector<std::tuple<ShapeTag, int, int>> census_summary(const std::vector<CellRecord>& recs);

/// Vertex set with derived edge graph, facets and census.
struct Polytope {
    PointSet vertices;
    EdgeGraph edges;
    FacetList cells;
    std::vector<CellRecord> census;
};

Polytope build_polytope(PointSet pts, const Group& group, int threads = 0);

/// Every ridge (2-face) must be shared by exactly two facets.
bool ridges_manifold(const PointSet& pts, const FacetList& cells);

}  // namespace qp
