#include "quatpoly/root_system.hpp"

#include <stdexcept>

namespace qp {

std::vector<std::vector<FieldScalar>> matrix_inverse(std::vector<std::vector<FieldScalar>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<FieldScalar>> inv(n, std::vector<FieldScalar>(n, FieldScalar(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = FieldScalar(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("matrix_inverse: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        FieldScalar d = m[col][col].inverse();
        for (int j = 0; j < n; ++j) { m[col][j] *= d; inv[col][j] *= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            FieldScalar f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

RootSystemData RootSystemData::from_roots(std::vector<Quaternion> roots) {
    const int n = static_cast<int>(roots.size());
    RootSystemData rs;
    rs.roots = std::move(roots);
    rs.gram.assign(n, std::vector<FieldScalar>(n, FieldScalar(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.gram[i][j] = quat_dot(rs.roots[i], rs.roots[j]);
    auto cinv = matrix_inverse(rs.gram);
    rs.weights.reserve(n);
    for (int i = 0; i < n; ++i) {
        Quaternion w;
        for (int j = 0; j < n; ++j) w += rs.roots[j] * cinv[i][j];
        rs.weights.push_back(w);
    }
    return rs;
}

std::vector<GroupElement> RootSystemData::reflections() const {
    std::vector<GroupElement> out;
    out.reserve(roots.size());
    for (const auto& a : roots) out.push_back(reflection_from_root(a));
    return out;
}

Quaternion dynkin_to_cartesian(const std::vector<FieldScalar>& coeffs, const RootSystemData& roots) {
    if (static_cast<int>(coeffs.size()) != roots.rank())
        throw std::invalid_argument("dynkin_to_cartesian: coefficient count != rank");
    Quaternion v;
    for (int i = 0; i < roots.rank(); ++i) v += roots.weights[i] * coeffs[i];
    return v;
}

}  // namespace qp
