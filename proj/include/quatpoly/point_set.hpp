#pragma once

#include <vector>

#include "quatpoly/quaternion.hpp"

namespace qp {

/// Deduplicated, canonically (lexicographically) sorted set of exact 4D points.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Quaternion> pts);

    int size() const { return static_cast<int>(pts_.size()); }
    bool empty() const { return pts_.empty(); }
    const Quaternion& operator[](int i) const { return pts_[i]; }
    const std::vector<Quaternion>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    bool contains(const Quaternion& v) const { return index_of(v) >= 0; }
    /// Index in canonical order, or -1.
    int index_of(const Quaternion& v) const;

    bool operator==(const PointSet& o) const { return pts_ == o.pts_; }
    bool operator!=(const PointSet& o) const { return !(*this == o); }

    PointSet scaled(const FieldScalar& s) const;
    /// tau <-> sigma mirror of every point.
    PointSet galois_sqrt5() const;
    static PointSet set_union(const PointSet& x, const PointSet& y);

private:
    std::vector<Quaternion> pts_;
};

}  // namespace qp
