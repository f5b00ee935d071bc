#include "quatpoly/project3d.hpp"

#include <algorithm>
#include <stdexcept>

namespace qp {

std::vector<Vec3> imaginary_parts(const PointSet& pts) {
    std::vector<Vec3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.emplace_back(p[1], p[2], p[3]);
    return out;
}

std::vector<RealPartClass> partition_by_real_part(const PointSet& s) {
    const FieldScalar half = FieldScalar::rational(1, 2);
    const std::vector<std::pair<FieldScalar, std::string>> classes = {
        {FieldScalar::tau() * half, "tau/2"},   {-FieldScalar::tau() * half, "-tau/2"},
        {FieldScalar::sigma() * half, "sigma/2"}, {-FieldScalar::sigma() * half, "-sigma/2"},
        {half, "1/2"},                          {-half, "-1/2"},
        {FieldScalar(0), "0"}};
    std::vector<std::vector<Quaternion>> buckets(classes.size());
    for (const auto& p : s) {
        bool placed = false;
        for (size_t k = 0; k < classes.size(); ++k)
            if (p[0] == classes[k].first) {
                buckets[k].push_back(p);
                placed = true;
                break;
            }
        if (!placed)
            throw std::invalid_argument("partition_by_real_part: unexpected real part " + p[0].str());
    }
    std::vector<RealPartClass> out;
    for (size_t k = 0; k < classes.size(); ++k) {
        RealPartClass c;
        c.real_part = classes[k].first;
        c.label = classes[k].second;
        c.points = PointSet(std::move(buckets[k]));
        c.imaginary = imaginary_parts(c.points);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<PointSet> pyritohedral_orbits(const PointSet& pts, const Group& group) {
    // the action must fix real parts: Re(g(1)) = 1 and Re(g(e_i)) = 0
    for (const auto& g : group) {
        if (g.apply(Quaternion::one())[0] != FieldScalar(1))
            throw std::invalid_argument("pyritohedral_orbits: group does not fix real parts");
        for (int i = 1; i < 4; ++i)
            if (!g.apply(Quaternion::unit(i))[0].is_zero())
                throw std::invalid_argument("pyritohedral_orbits: group does not fix real parts");
    }
    std::vector<bool> seen(pts.size(), false);
    std::vector<PointSet> orbits;
    for (int i = 0; i < pts.size(); ++i) {
        if (seen[i]) continue;
        std::vector<Quaternion> orb;
        for (const auto& g : group) {
            Quaternion q = g.apply(pts[i]);
            int j = pts.index_of(q);
            if (j < 0) throw std::invalid_argument("pyritohedral_orbits: group does not preserve the set");
            if (!seen[j]) {
                seen[j] = true;
                orb.push_back(q);
            }
        }
        orbits.emplace_back(std::move(orb));
    }
    // canonical order: by smallest element
    std::sort(orbits.begin(), orbits.end(),
              [](const PointSet& a, const PointSet& b) { return a[0] < b[0]; });
    return orbits;
}

}  // namespace qp
