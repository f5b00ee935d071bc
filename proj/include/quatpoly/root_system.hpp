#pragma once

#include <vector>

#include "quatpoly/group.hpp"
#include "quatpoly/quaternion.hpp"

namespace qp {

/// Simple roots with their Gram (Cartan) matrix and the dual weight basis
/// omega_i, defined by (omega_i, alpha_j) = delta_ij.
struct RootSystemData {
    std::vector<Quaternion> roots;
    std::vector<std::vector<FieldScalar>> gram;     // gram[i][j] = (alpha_i, alpha_j)
    std::vector<Quaternion> weights;

    int rank() const { return static_cast<int>(roots.size()); }

    static RootSystemData from_roots(std::vector<Quaternion> roots);

    std::vector<GroupElement> reflections() const;
};

/// Vector with the given Dynkin-basis coefficients: sum_i coeffs[i] * omega_i.
Quaternion dynkin_to_cartesian(const std::vector<FieldScalar>& coeffs, const RootSystemData& roots);

/// Exact inverse of a small square FieldScalar matrix (Gauss-Jordan).
std::vector<std::vector<FieldScalar>> matrix_inverse(std::vector<std::vector<FieldScalar>> m);

}  // namespace qp
