#pragma once

#include <string>
#include <vector>

#include "quatpoly/group.hpp"
#include "quatpoly/solid3.hpp"

namespace qp {

/// One class of the real-part partition of the snub 24-cell vertices.
struct RealPartClass {
    FieldScalar real_part;          // tau/2, -tau/2, sigma/2, -sigma/2, 1/2, -1/2, 0
    std::string label;
    PointSet points;                // 4D points of the class
    std::vector<Vec3> imaginary;    // their imaginary parts
};

/// Partition the 96-point set S by exact real part into the seven classes
/// {tau/2, -tau/2, sigma/2, -sigma/2, 1/2, -1/2, 0} with sizes
/// {12,12,12,12,12,12,24}. Throws if an unexpected real part occurs.
std::vector<RealPartClass> partition_by_real_part(const PointSet& s);

/// Imaginary parts of a point set as 3D vectors.
std::vector<Vec3> imaginary_parts(const PointSet& pts);

/// Orbit decomposition of a point set under a group whose action fixes real
/// parts exactly (checked on the basis images; throws otherwise). Orbits are
/// canonically ordered by their smallest element.
std::vector<PointSet> pyritohedral_orbits(const PointSet& pts, const Group& group);

}  // namespace qp
