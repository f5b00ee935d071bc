#pragma once

#include <map>
#include <string>
#include <vector>

#include "quatpoly/vec3.hpp"

namespace qp {

/// Polygon classification by exact edge-length cycle and exact parallelism;
/// tags are assigned only on exact matches.
struct PolygonClass {
    enum class Tag {
        EquilateralTriangle,
        IsoscelesTriangle,
        Square,
        GoldenRectangle,
        Kite,
        Trapezoid,
        Pentagon,
        IsogonalHexagon,
        Other,
    };
    Tag tag = Tag::Other;
    std::vector<FieldScalar> edge_len2;   // squared lengths, cyclic order

    std::string name() const;
    /// sorted distinct squared edge lengths
    std::vector<FieldScalar> distinct_len2() const;
};

std::string polygon_tag_name(PolygonClass::Tag t);

/// Classify one planar convex polygon given its cyclic vertex list.
/// Throws on a non-planar cycle.
PolygonClass classify_polygon(const std::vector<Vec3>& cycle);

/// Convex 3D solid: canonical vertex order, faces as convex cyclic index
/// lists oriented outward (counterclockwise seen from outside), each starting
/// at its smallest vertex index.
struct Solid3 {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;

    int edge_count() const;
    std::vector<Vec3> face_cycle(int f) const;
    std::vector<PolygonClass> classify_faces() const;
    /// counts by polygon tag
    std::map<PolygonClass::Tag, int> face_census() const;

    /// Exact structural checks: V - E + F = 2, every edge shared by exactly
    /// two faces with opposite orientation, faces planar and convex.
    /// Throws std::logic_error describing the first violation.
    void validate() const;
};

/// Exact brute-force 3D convex hull (supporting-plane scan over triples,
/// coplanar triangles merged into maximal polygon faces). Intended for the
/// small point counts in this artifact. Throws on degenerate span.
Solid3 hull3d(const std::vector<Vec3>& points);

}  // namespace qp
