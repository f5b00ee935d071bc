#pragma once

#include <string>

#include "quatpoly/quaternion.hpp"

namespace qp {

/// One orthogonal transformation of 4-space as a pair of unit quaternions
/// plus a star flag:
///
///   [p,q]  : v -> p v q        (star = false)
///   [p,q]* : v -> p vbar q     (star = true)
///
/// (p,q) and (-p,-q) act identically; the stored representative fixes the
/// sign so that the first nonzero coefficient of p is positive.
class GroupElement {
public:
    GroupElement() : p_(Quaternion::one()), q_(Quaternion::one()), star_(false) {}
    GroupElement(Quaternion p, Quaternion q, bool star);

    static GroupElement identity() { return {}; }

    const Quaternion& p() const { return p_; }
    const Quaternion& q() const { return q_; }
    bool star() const { return star_; }

    Quaternion apply(const Quaternion& v) const {
        return star_ ? p_ * v.conjugate() * q_ : p_ * v * q_;
    }

    /// Composition: (g*h) applies h first, then g. Closed-form pair rules:
    ///   [p,q][r,s] = [pr, sq]          [p,q][r,s]* = [pr, sq]*
    ///   [p,q]*[r,s] = [p sbar, rbar q]*  [p,q]*[r,s]* = [p sbar, rbar q]
    GroupElement operator*(const GroupElement& h) const;

    GroupElement inverse() const {
        return star_ ? GroupElement(q_, p_, true) : GroupElement(p_.conjugate(), q_.conjugate(), false);
    }

    bool is_identity() const { return *this == identity(); }

    bool operator==(const GroupElement& o) const {
        return star_ == o.star_ && p_ == o.p_ && q_ == o.q_;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    Quaternion p_, q_;
    bool star_;
};

int compare_lex(const GroupElement& x, const GroupElement& y);
inline bool operator<(const GroupElement& x, const GroupElement& y) { return compare_lex(x, y) < 0; }

/// Reflection r with r(v) = -alpha vbar alpha / |alpha|^2, i.e. the bracket
/// [n, -n]* with n = alpha/|alpha|. Fixes the hyperplane orthogonal to alpha
/// and negates alpha. Throws if alpha is zero or |alpha| has no exact square
/// root in the field.
GroupElement reflection_from_root(const Quaternion& alpha);

}  // namespace qp
