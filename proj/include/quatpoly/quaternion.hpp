#pragma once

#include <array>
#include <string>

#include "quatpoly/field.hpp"

namespace qp {

/// Quaternion over Q(sqrt2, sqrt5); components along 1, e1, e2, e3.
/// The imaginary units satisfy e_i e_j = -delta_ij + eps_ijk e_k.
struct Quaternion {
    std::array<FieldScalar, 4> c;

    Quaternion() = default;
    Quaternion(FieldScalar q0, FieldScalar q1, FieldScalar q2, FieldScalar q3)
        : c{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion e1()  { return {0, 1, 0, 0}; }
    static Quaternion e2()  { return {0, 0, 1, 0}; }
    static Quaternion e3()  { return {0, 0, 0, 1}; }
    static Quaternion unit(int i);

    const FieldScalar& operator[](int i) const { return c[i]; }
    FieldScalar& operator[](int i) { return c[i]; }

    Quaternion operator+(const Quaternion& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}; }
    Quaternion operator-(const Quaternion& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}; }
    Quaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    Quaternion operator*(const Quaternion& o) const;          // Hamilton product
    Quaternion operator*(const FieldScalar& s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }
    Quaternion& operator+=(const Quaternion& o) { for (int i = 0; i < 4; ++i) c[i] += o.c[i]; return *this; }

    bool operator==(const Quaternion& o) const { return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2] && c[3] == o.c[3]; }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    /// Conjugate: negates the e1, e2, e3 components.
    Quaternion conjugate() const { return {c[0], -c[1], -c[2], -c[3]}; }

    /// tau <-> sigma mirror, componentwise Galois conjugate sqrt5 -> -sqrt5.
    Quaternion galois_sqrt5() const {
        return {c[0].conj_sqrt5(), c[1].conj_sqrt5(), c[2].conj_sqrt5(), c[3].conj_sqrt5()};
    }

    FieldScalar norm2() const { return dot(*this); }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }
    bool is_unit() const;

    /// Quaternionic scalar product (p,q) = (pbar q + qbar p)/2; equals the
    /// Euclidean dot product of the coefficient vectors.
    FieldScalar dot(const Quaternion& o) const {
        return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2] + c[3] * o.c[3];
    }

    std::string str() const;
};

inline Quaternion operator*(const FieldScalar& s, const Quaternion& q) { return q * s; }

inline FieldScalar quat_dot(const Quaternion& p, const Quaternion& q) { return p.dot(q); }

int compare_lex(const Quaternion& x, const Quaternion& y);
inline bool operator<(const Quaternion& x, const Quaternion& y) { return compare_lex(x, y) < 0; }

}  // namespace qp
