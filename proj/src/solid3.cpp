#include "quatpoly/solid3.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qp {

std::string polygon_tag_name(PolygonClass::Tag t) {
    using Tag = PolygonClass::Tag;
    switch (t) {
        case Tag::EquilateralTriangle: return "equilateral-triangle";
        case Tag::IsoscelesTriangle: return "isosceles-triangle";
        case Tag::Square: return "square";
        case Tag::GoldenRectangle: return "golden-rectangle";
        case Tag::Kite: return "kite";
        case Tag::Trapezoid: return "trapezoid";
        case Tag::Pentagon: return "pentagon";
        case Tag::IsogonalHexagon: return "isogonal-hexagon";
        case Tag::Other: return "other";
    }
    return "?";
}

std::string PolygonClass::name() const { return polygon_tag_name(tag); }

std::vector<FieldScalar> PolygonClass::distinct_len2() const {
    std::vector<FieldScalar> d = edge_len2;
    std::sort(d.begin(), d.end(),
              [](const FieldScalar& x, const FieldScalar& y) { return compare_real(x, y) < 0; });
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

PolygonClass classify_polygon(const std::vector<Vec3>& cyc) {
    const int n = static_cast<int>(cyc.size());
    if (n < 3) throw std::invalid_argument("classify_polygon: fewer than 3 vertices");
    // planarity: every vertex on the plane of the first independent triple
    Vec3 nrm = (cyc[1] - cyc[0]).cross(cyc[2] - cyc[0]);
    if (nrm.is_zero()) throw std::invalid_argument("classify_polygon: collinear cycle");
    for (const auto& v : cyc)
        if (!nrm.dot(v - cyc[0]).is_zero()) throw std::invalid_argument("classify_polygon: non-planar cycle");

    PolygonClass pc;
    for (int i = 0; i < n; ++i) pc.edge_len2.push_back((cyc[(i + 1) % n] - cyc[i]).norm2());
    const auto& L = pc.edge_len2;
    using Tag = PolygonClass::Tag;

    if (n == 3) {
        if (L[0] == L[1] && L[1] == L[2]) pc.tag = Tag::EquilateralTriangle;
        else if (L[0] == L[1] || L[1] == L[2] || L[2] == L[0]) pc.tag = Tag::IsoscelesTriangle;
        return pc;
    }
    if (n == 4) {
        const bool par02 = (cyc[1] - cyc[0]).cross(cyc[3] - cyc[2]).is_zero();
        const bool par13 = (cyc[2] - cyc[1]).cross(cyc[0] - cyc[3]).is_zero();
        FieldScalar d02 = (cyc[2] - cyc[0]).norm2(), d13 = (cyc[3] - cyc[1]).norm2();
        const bool all_equal = L[0] == L[1] && L[1] == L[2] && L[2] == L[3];
        const bool opp_equal = L[0] == L[2] && L[1] == L[3];
        if (all_equal && d02 == d13) {
            pc.tag = Tag::Square;
        } else if (opp_equal && !all_equal && d02 == d13) {
            // rectangle; golden iff long^2 = tau^2 short^2
            FieldScalar tau2 = FieldScalar::tau() * FieldScalar::tau();
            const FieldScalar &x = L[0], &y = L[1];
            if (x == y * tau2 || y == x * tau2) pc.tag = Tag::GoldenRectangle;
        } else if (((L[0] == L[1] && L[2] == L[3]) || (L[1] == L[2] && L[3] == L[0])) && !all_equal) {
            pc.tag = Tag::Kite;
        } else if (par02 != par13) {
            pc.tag = Tag::Trapezoid;
        }
        return pc;
    }
    if (n == 5) {
        pc.tag = Tag::Pentagon;
        return pc;
    }
    if (n == 6) {
        if (L[0] == L[2] && L[2] == L[4] && L[1] == L[3] && L[3] == L[5] && L[0] != L[1])
            pc.tag = Tag::IsogonalHexagon;
        return pc;
    }
    return pc;
}

int Solid3::edge_count() const {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : faces)
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    return static_cast<int>(edges.size());
}

std::vector<Vec3> Solid3::face_cycle(int f) const {
    std::vector<Vec3> out;
    for (int i : faces[f]) out.push_back(vertices[i]);
    return out;
}

std::vector<PolygonClass> Solid3::classify_faces() const {
    std::vector<PolygonClass> out;
    out.reserve(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) out.push_back(classify_polygon(face_cycle(static_cast<int>(f))));
    return out;
}

std::map<PolygonClass::Tag, int> Solid3::face_census() const {
    std::map<PolygonClass::Tag, int> out;
    for (const auto& pc : classify_faces()) out[pc.tag]++;
    return out;
}

void Solid3::validate() const {
    const int V = static_cast<int>(vertices.size());
    const int F = static_cast<int>(faces.size());
    const int E = edge_count();
    if (V - E + F != 2) throw std::logic_error("Solid3: V - E + F != 2");
    // each directed edge must appear exactly once (so each undirected edge in
    // exactly two faces with opposite orientation)
    std::set<std::pair<int, int>> directed;
    for (const auto& f : faces)
        for (size_t i = 0; i < f.size(); ++i) {
            auto e = std::make_pair(f[i], f[(i + 1) % f.size()]);
            if (!directed.insert(e).second) throw std::logic_error("Solid3: duplicated directed edge");
        }
    for (const auto& [a, b] : directed)
        if (!directed.count({b, a})) throw std::logic_error("Solid3: edge not shared by two faces");
    // planar convex faces, outward orientation against the solid centroid
    // (kept as the unscaled vertex sum to avoid division)
    Vec3 cen;
    for (const auto& v : vertices) cen = cen + v;
    const FieldScalar nv(static_cast<long>(vertices.size()));
    for (const auto& f : faces) {
        std::vector<Vec3> cyc;
        for (int i : f) cyc.push_back(vertices[i]);
        Vec3 nrm = (cyc[1] - cyc[0]).cross(cyc[2] - cyc[0]);
        for (const auto& v : cyc)
            if (!nrm.dot(v - cyc[0]).is_zero()) throw std::logic_error("Solid3: non-planar face");
        const int m = static_cast<int>(cyc.size());
        for (int i = 0; i < m; ++i) {
            Vec3 a = cyc[(i + 1) % m] - cyc[i], b = cyc[(i + 2) % m] - cyc[(i + 1) % m];
            if (a.cross(b).dot(nrm).sign() <= 0) throw std::logic_error("Solid3: face not strictly convex");
        }
        if (nrm.dot(cen - cyc[0] * nv).sign() >= 0) throw std::logic_error("Solid3: face oriented inward");
    }
}

namespace {

// convex cyclic order of coplanar points around their centroid, ccw about n
std::vector<int> order_cycle(const std::vector<Vec3>& pts, const std::vector<int>& face, const Vec3& n) {
    // work with offsets scaled by |face| to stay in the field without division
    const auto m = static_cast<long>(face.size());
    Vec3 cen;
    for (int i : face) cen = cen + pts[i];
    auto offset = [&](int i) { return pts[i] * FieldScalar(m) - cen; };
    const Vec3 ref = offset(face[0]);
    auto half = [&](const Vec3& u) -> int {
        // 0: angle 0; 1: (0,pi); 2: pi; 3: (pi,2pi)
        int s = ref.cross(u).dot(n).sign();
        if (s > 0) return 1;
        if (s < 0) return 3;
        return ref.dot(u).sign() > 0 ? 0 : 2;
    };
    std::vector<int> idx = face;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        Vec3 u = offset(a), v = offset(b);
        int ha = half(u), hb = half(v);
        if (ha != hb) return ha < hb;
        int s = u.cross(v).dot(n).sign();
        if (s != 0) return s > 0;
        return a < b;  // coincident rays cannot happen for convex position
    });
    // canonical start: smallest vertex index first, direction preserved
    auto it = std::min_element(idx.begin(), idx.end());
    std::rotate(idx.begin(), it, idx.end());
    return idx;
}

}  // namespace

Solid3 hull3d(const std::vector<Vec3>& points) {
    std::vector<Vec3> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n < 4) throw std::invalid_argument("hull3d: need at least 4 distinct points");

    // interior reference: centroid scaled by n (exact, no division)
    Vec3 cen;
    for (const auto& p : pts) cen = cen + p;

    std::set<std::vector<int>> face_sets;
    std::vector<std::pair<std::vector<int>, Vec3>> raw_faces;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                bool covered = false;
                for (const auto& [fs, nn] : raw_faces)
                    if (std::binary_search(fs.begin(), fs.end(), i) &&
                        std::binary_search(fs.begin(), fs.end(), j) &&
                        std::binary_search(fs.begin(), fs.end(), k)) { covered = true; break; }
                if (covered) continue;
                Vec3 nn = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
                if (nn.is_zero()) continue;
                int inner = 0;
                bool ok = true;
                std::vector<int> on;
                for (int x = 0; x < n; ++x) {
                    int s = nn.dot(pts[x] - pts[i]).sign();
                    if (s == 0) {
                        on.push_back(x);
                    } else {
                        if (inner == 0) inner = s;
                        if (s != inner) { ok = false; break; }
                    }
                }
                if (!ok) continue;
                // orient outward: centroid strictly inside
                int cs = nn.dot(cen - pts[i] * FieldScalar(static_cast<long>(n))).sign();
                if (cs == 0) throw std::invalid_argument("hull3d: degenerate span");
                if (cs > 0) nn = -nn;
                if (face_sets.insert(on).second) raw_faces.emplace_back(std::move(on), nn);
            }
    if (raw_faces.size() < 4) throw std::invalid_argument("hull3d: degenerate span");

    Solid3 out;
    out.vertices = pts;
    for (const auto& [fs, nn] : raw_faces) out.faces.push_back(order_cycle(pts, fs, nn));
    std::sort(out.faces.begin(), out.faces.end());
    return out;
}

}  // namespace qp
