#pragma once

#include <vector>

#include "quatpoly/point_set.hpp"

namespace qp {

/// 4D hyperplane normal; reuses the quaternion component storage.
using Vec4 = Quaternion;

/// Facet (3D cell) list of a 4-polytope: each facet is the complete sorted
/// list of vertex indices on its supporting hyperplane; the facet list itself
/// is canonically sorted, independent of scheduling and worker count.
struct FacetList {
    std::vector<std::vector<int>> facets;

    int size() const { return static_cast<int>(facets.size()); }
};

struct FacetOptions {
    int threads = 0;   // 0 = worker_count()
};

/// Exact gift-wrapping facet enumeration: seed facet by lexicographic extreme
/// search (rotating a supporting hyperplane to full contact), then pivot
/// across every ridge until closure. OpenMP-parallel over the ridge frontier.
/// Throws if the points do not span 4D affinely.
FacetList facets(const PointSet& pts, const FacetOptions& opt = {});

/// Serial reference implementation (plain queue, no OpenMP); kept for testing
/// and benchmarking against the parallel kernel. Identical output.
FacetList facets_serial(const PointSet& pts);

/// Exhaustive oracle: scans all 4-point hyperplanes and merges maximal
/// coplanar supporting sets. Guarded to <= 30 points unless overridden.
FacetList brute_facets(const PointSet& pts, bool override_guard = false);

/// Outward supporting-hyperplane normal of a facet (interior side negative).
Vec4 facet_normal(const PointSet& pts, const std::vector<int>& facet);

/// The 2-faces (ridges) of one facet, each as a sorted index list into the
/// full point set; canonically ordered.
std::vector<std::vector<int>> facet_ridges(const PointSet& pts, const std::vector<int>& facet);

/// Affine rank of the point set (1 + dimension of the affine hull), <= 5.
int affine_rank(const PointSet& pts);

}  // namespace qp
