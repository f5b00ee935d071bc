#include "quatpoly/group_element.hpp"

#include <sstream>
#include <stdexcept>

namespace qp {

GroupElement::GroupElement(Quaternion p, Quaternion q, bool star)
    : p_(std::move(p)), q_(std::move(q)), star_(star) {
    if (!p_.is_unit() || !q_.is_unit())
        throw std::invalid_argument("GroupElement: p, q must be unit quaternions");
    for (int i = 0; i < 4; ++i) {
        int s = p_.c[i].sign();
        if (s > 0) break;
        if (s < 0) {
            p_ = -p_;
            q_ = -q_;
            break;
        }
    }
}

GroupElement GroupElement::operator*(const GroupElement& h) const {
    if (!star_) return {p_ * h.p_, h.q_ * q_, h.star_};
    return {p_ * h.q_.conjugate(), h.p_.conjugate() * q_, !h.star_};
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "[" << p_.str() << ", " << q_.str() << "]" << (star_ ? "*" : "");
    return os.str();
}

int compare_lex(const GroupElement& x, const GroupElement& y) {
    if (x.star() != y.star()) return x.star() ? 1 : -1;
    int cmp = compare_lex(x.p(), y.p());
    if (cmp != 0) return cmp;
    return compare_lex(x.q(), y.q());
}

GroupElement reflection_from_root(const Quaternion& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("reflection_from_root: zero root");
    auto len = field_sqrt(alpha.norm2());
    if (!len) throw std::invalid_argument("reflection_from_root: |alpha| not in the field");
    Quaternion n = alpha * len->inverse();
    return {n, -n, true};
}

}  // namespace qp
