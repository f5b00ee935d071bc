#include "quatpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "quatpoly/parallel.hpp"

namespace qp {

std::vector<int> EdgeGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [i, j] : edges) {
        if (i == v) out.push_back(j);
        if (j == v) out.push_back(i);
    }
    return out;
}

namespace {

EdgeGraph edges_common(const PointSet& pts, int threads) {
    const int n = pts.size();
    if (n < 2) throw std::invalid_argument("edge_graph: need at least 2 distinct points");
    // exact pairwise squared distances, upper triangle
    std::vector<std::vector<FieldScalar>> d2(n);
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
    for (int i = 0; i < n; ++i) {
        d2[i].resize(n - i - 1);
        for (int j = i + 1; j < n; ++j) d2[i][j - i - 1] = (pts[i] - pts[j]).norm2();
    }
    FieldScalar best = d2[0][0];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const FieldScalar& v = d2[i][j - i - 1];
            if (compare_real(v, best) < 0) best = v;
        }
    EdgeGraph g;
    g.min_dist2 = best;
    g.degree.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d2[i][j - i - 1] == best) {
                g.edges.emplace_back(i, j);
                ++g.degree[i];
                ++g.degree[j];
            }
    return g;
}

}  // namespace

EdgeGraph edge_graph(const PointSet& pts, int threads) {
    return edges_common(pts, threads > 0 ? threads : worker_count());
}

EdgeGraph edge_graph_serial(const PointSet& pts) { return edges_common(pts, 1); }

std::string shape_name(ShapeTag t) {
    switch (t) {
        case ShapeTag::Icosahedron: return "icosahedron";
        case ShapeTag::Tetrahedron: return "tetrahedron";
        case ShapeTag::Cube: return "cube";
        case ShapeTag::TruncatedOctahedron: return "truncated-octahedron";
        case ShapeTag::Other: return "other";
    }
    return "?";
}

namespace {

// Exact (vertex count, edge multiset, face polygon census) -> tag.
// Anything not matching a known combinatorial+metric signature is Other,
// which the acceptance checks treat as a hard failure.
ShapeTag classify_cell(const PointSet& pts, const std::vector<int>& cell) {
    const int nv = static_cast<int>(cell.size());
    auto faces = facet_ridges(pts, cell);
    std::map<int, int> by_size;
    for (const auto& f : faces) by_size[static_cast<int>(f.size())]++;

    std::vector<Quaternion> v;
    v.reserve(cell.size());
    for (int i : cell) v.push_back(pts[i]);
    PointSet local(std::move(v));
    EdgeGraph g = edge_graph_serial(local);
    const int nmin = static_cast<int>(g.edges.size());

    // regular tetrahedron: all 6 pairs at the same distance
    if (nv == 4 && faces.size() == 4 && by_size[3] == 4 && nmin == 6) return ShapeTag::Tetrahedron;
    // regular icosahedron: 30 equal edges, 20 triangles
    if (nv == 12 && faces.size() == 20 && by_size[3] == 20 && nmin == 30) return ShapeTag::Icosahedron;
    // cube: 12 equal edges, 6 squares
    if (nv == 8 && faces.size() == 6 && by_size[4] == 6 && nmin == 12) return ShapeTag::Cube;
    // quasi-regular truncated octahedron: 12 short + 24 long edges with
    // long^2 = tau^2 short^2, 6 squares + 8 isogonal hexagons
    if (nv == 24 && faces.size() == 14 && by_size[4] == 6 && by_size[6] == 8 && nmin == 12) {
        FieldScalar long2 = g.min_dist2 * FieldScalar::tau() * FieldScalar::tau();
        int longs = 0;
        for (int i = 0; i < local.size(); ++i)
            for (int j = i + 1; j < local.size(); ++j)
                if ((local[i] - local[j]).norm2() == long2) ++longs;
        if (longs == 24) return ShapeTag::TruncatedOctahedron;
    }
    return ShapeTag::Other;
}

}  // namespace

std::vector<CellRecord> cell_census(const PointSet& pts, const FacetList& cells,
                                    const Group& group, int threads) {
    if (threads <= 0) threads = worker_count();
    // the group must map the vertex set to itself; checking the generators
    // suffices when they are known (the elements are their closure)
    const auto& probe = group.generators().empty() ? group.elements() : group.generators();
    for (const auto& g : probe)
        for (const auto& p : pts)
            if (!pts.contains(g.apply(p)))
                throw std::invalid_argument("cell_census: group does not preserve the polytope");

    std::vector<CellRecord> recs(cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long ci = 0; ci < static_cast<long>(cells.size()); ++ci) {
        const auto& cell = cells.facets[ci];
        CellRecord r;
        r.vertex_indices = cell;
        r.shape = classify_cell(pts, cell);
        Quaternion cen;
        for (int i : cell) cen += pts[i];
        r.centroid = cen * FieldScalar(make_rational(1, static_cast<long>(cell.size())));
        // stabilizer: elements mapping the cell's vertex set to itself
        std::vector<Quaternion> cpts;
        cpts.reserve(cell.size());
        for (int i : cell) cpts.push_back(pts[i]);
        std::sort(cpts.begin(), cpts.end());
        int stab = 0;
        for (const auto& g : group) {
            bool ok = true;
            for (const auto& p : cpts) {
                if (!std::binary_search(cpts.begin(), cpts.end(), g.apply(p))) { ok = false; break; }
            }
            if (ok) ++stab;
        }
        r.stabilizer_order = stab;
        recs[ci] = std::move(r);
    }
    return recs;
}

std::vector<std::tuple<ShapeTag, int, int>> census_summary(const std::vector<CellRecord>& recs) {
    std::map<std::pair<int, int>, int> counts;  // (shape, stab) -> n
    for (const auto& r : recs) counts[{static_cast<int>(r.shape), r.stabilizer_order}]++;
    std::vector<std::tuple<ShapeTag, int, int>> out;
    for (const auto& [k, v] : counts) out.emplace_back(static_cast<ShapeTag>(k.first), k.second, v);
    return out;
}

Polytope build_polytope(PointSet pts, const Group& group, int threads) {
    Polytope p;
    p.vertices = std::move(pts);
    p.edges = edge_graph(p.vertices, threads);
    p.cells = facets(p.vertices, FacetOptions{threads});
    // every vertex extreme: a point interior to the hull lies on no facet
    std::vector<char> on_facet(p.vertices.size(), 0);
    for (const auto& f : p.cells.facets)
        for (int i : f) on_facet[i] = 1;
    for (int i = 0; i < p.vertices.size(); ++i)
        if (!on_facet[i]) throw std::invalid_argument("build_polytope: non-extreme vertex");
    p.census = cell_census(p.vertices, p.cells, group, threads);
    return p;
}

bool ridges_manifold(const PointSet& pts, const FacetList& cells) {
    std::map<std::vector<int>, int> count;
    for (const auto& f : cells.facets)
        for (const auto& r : facet_ridges(pts, f)) count[r]++;
    for (const auto& [r, c] : count)
        if (c != 2) return false;
    return !count.empty();
}

}  // namespace qp
