#pragma once

#include <array>
#include <string>

#include "quatpoly/field.hpp"

namespace qp {

/// Exact 3D point/vector over Q(sqrt2, sqrt5).
struct Vec3 {
    std::array<FieldScalar, 3> c;

    Vec3() = default;
    Vec3(FieldScalar x, FieldScalar y, FieldScalar z) : c{std::move(x), std::move(y), std::move(z)} {}

    const FieldScalar& operator[](int i) const { return c[i]; }
    FieldScalar& operator[](int i) { return c[i]; }

    Vec3 operator+(const Vec3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
    Vec3 operator-(const Vec3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
    Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
    Vec3 operator*(const FieldScalar& s) const { return {c[0] * s, c[1] * s, c[2] * s}; }
    bool operator==(const Vec3& o) const { return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2]; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }

    FieldScalar dot(const Vec3& o) const { return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2]; }
    Vec3 cross(const Vec3& o) const {
        return {c[1] * o.c[2] - c[2] * o.c[1], c[2] * o.c[0] - c[0] * o.c[2],
                c[0] * o.c[1] - c[1] * o.c[0]};
    }
    FieldScalar norm2() const { return dot(*this); }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

    std::string str() const { return "(" + c[0].str() + ", " + c[1].str() + ", " + c[2].str() + ")"; }
};

inline int compare_lex(const Vec3& x, const Vec3& y) {
    for (int i = 0; i < 3; ++i) {
        int c = compare_lex(x.c[i], y.c[i]);
        if (c != 0) return c;
    }
    return 0;
}
inline bool operator<(const Vec3& x, const Vec3& y) { return compare_lex(x, y) < 0; }

}  // namespace qp
