#include "quatpoly/quaternion.hpp"

#include <sstream>
#include <stdexcept>

namespace qp {

Quaternion Quaternion::unit(int i) {
    switch (i) {
        case 0: return one();
        case 1: return e1();
        case 2: return e2();
        case 3: return e3();
    }
    throw std::out_of_range("Quaternion::unit");
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    const FieldScalar &a0 = c[0], &a1 = c[1], &a2 = c[2], &a3 = c[3];
    const FieldScalar &b0 = o.c[0], &b1 = o.c[1], &b2 = o.c[2], &b3 = o.c[3];
    return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1};
}

bool Quaternion::is_unit() const {
    FieldScalar n = norm2();
    return n.is_rational() && n.a == 1;
}

std::string Quaternion::str() const {
    std::ostringstream os;
    os << "(" << c[0].str() << ", " << c[1].str() << ", " << c[2].str() << ", " << c[3].str() << ")";
    return os.str();
}

int compare_lex(const Quaternion& x, const Quaternion& y) {
    for (int i = 0; i < 4; ++i) {
        int cmp = compare_lex(x.c[i], y.c[i]);
        if (cmp != 0) return cmp;
    }
    return 0;
}

}  // namespace qp
