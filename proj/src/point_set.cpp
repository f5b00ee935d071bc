#include "quatpoly/point_set.hpp"

#include <algorithm>

namespace qp {

PointSet::PointSet(std::vector<Quaternion> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

int PointSet::index_of(const Quaternion& v) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), v);
    if (it != pts_.end() && *it == v) return static_cast<int>(it - pts_.begin());
    return -1;
}

PointSet PointSet::scaled(const FieldScalar& s) const {
    std::vector<Quaternion> out;
    out.reserve(pts_.size());
    for (const auto& p : pts_) out.push_back(p * s);
    return PointSet(std::move(out));
}

PointSet PointSet::galois_sqrt5() const {
    std::vector<Quaternion> out;
    out.reserve(pts_.size());
    for (const auto& p : pts_) out.push_back(p.galois_sqrt5());
    return PointSet(std::move(out));
}

PointSet PointSet::set_union(const PointSet& x, const PointSet& y) {
    std::vector<Quaternion> out = x.pts_;
    out.insert(out.end(), y.pts_.begin(), y.pts_.end());
    return PointSet(std::move(out));
}

}  // namespace qp
