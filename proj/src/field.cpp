#include "quatpoly/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qp {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("parse_rational: zero denominator '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

bool rational_sqrt(const Rational& r, Rational& root) {
    if (sgn(r) < 0) return false;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

// Basis product table: r2*r5 = r10, r2*r10 = 2 r5, r5*r10 = 5 r2,
// r2^2 = 2, r5^2 = 5, r10^2 = 10.
FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    FieldScalar r;
    r.a = a * o.a + 2 * (b * o.b) + 5 * (c * o.c) + 10 * (d * o.d);
    r.b = a * o.b + b * o.a + 5 * (c * o.d + d * o.c);
    r.c = a * o.c + c * o.a + 2 * (b * o.d + d * o.b);
    r.d = a * o.d + d * o.a + b * o.c + c * o.b;
    return r;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw std::domain_error("FieldScalar::inverse of zero");
    // y = x * conj2(x) lies in Q(sqrt5); z = y * conj5(y) is rational (the norm).
    FieldScalar y = *this * conj_sqrt2();
    FieldScalar z = y * y.conj_sqrt5();
    FieldScalar inv = conj_sqrt2() * y.conj_sqrt5();
    Rational zi = 1 / z.a;
    return {inv.a * zi, inv.b * zi, inv.c * zi, inv.d * zi};
}

namespace {

// sign(a + b*sqrt2) exactly.
int sign_q2(const Rational& a, const Rational& b) {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int cmp = sgn(a * a - 2 * b * b);   // |a| vs sqrt2 |b|
    return cmp > 0 ? sa : sb;           // cmp == 0 impossible: sqrt2 irrational
}

}  // namespace

int FieldScalar::sign() const {
    // x = u + v*sqrt5 with u = a + b*sqrt2, v = c + d*sqrt2.
    int su = sign_q2(a, b);
    int sv = sign_q2(c, d);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // compare u^2 vs 5 v^2 inside Q(sqrt2)
    Rational u2a = a * a + 2 * b * b, u2b = 2 * a * b;
    Rational v2a = c * c + 2 * d * d, v2b = 2 * c * d;
    int cmp = sign_q2(u2a - 5 * v2a, u2b - 5 * v2b);
    return cmp > 0 ? su : sv;           // cmp == 0 impossible: sqrt5 not in Q(sqrt2)
}

double FieldScalar::to_double() const {
    static const double R2 = std::sqrt(2.0), R5 = std::sqrt(5.0), R10 = std::sqrt(10.0);
    return a.get_d() + b.get_d() * R2 + c.get_d() * R5 + d.get_d() * R10;
}

std::string FieldScalar::str() const {
    std::ostringstream os;
    os << a.get_str() << " + " << b.get_str() << "*r2 + " << c.get_str() << "*r5 + " << d.get_str() << "*r10";
    return os.str();
}

int compare_lex(const FieldScalar& x, const FieldScalar& y) {
    int c0 = cmp(x.a, y.a);
    if (c0 != 0) return c0;
    c0 = cmp(x.b, y.b);
    if (c0 != 0) return c0;
    c0 = cmp(x.c, y.c);
    if (c0 != 0) return c0;
    return cmp(x.d, y.d);
}

namespace {

// Solve p^2 + k q^2 = s, 2pq = t over the rationals (y = p + q*sqrtk with
// y^2 = s + t*sqrtk). Returns the root with positive sign convention.
bool quad_sqrt(const Rational& s, const Rational& t, long k, Rational& p, Rational& q) {
    if (sgn(t) == 0) return false;  // handled by the pure cases
    // p^2 is a root of z^2 - s z + k t^2/4 = 0
    Rational disc = s * s - k * t * t;
    Rational rd;
    if (!rational_sqrt(disc, rd)) return false;
    for (int pick = 0; pick < 2; ++pick) {
        Rational z = (s + (pick == 0 ? rd : -rd)) / 2;
        Rational rp;
        if (sgn(z) >= 0 && rational_sqrt(z, rp) && sgn(rp) != 0) {
            p = rp;
            q = t / (2 * rp);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<FieldScalar> field_sqrt(const FieldScalar& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return FieldScalar();
    const bool qb = sgn(x.b) != 0, qc = sgn(x.c) != 0, qd = sgn(x.d) != 0;
    Rational r, p, q;
    if (!qb && !qc && !qd) {  // rational: try r, r*sqrt2, r*sqrt5, r*sqrt10
        if (rational_sqrt(x.a, r)) return FieldScalar(r);
        if (rational_sqrt(x.a / 2, r)) return FieldScalar(Rational(0), r, Rational(0), Rational(0));
        if (rational_sqrt(x.a / 5, r)) return FieldScalar(Rational(0), Rational(0), r, Rational(0));
        if (rational_sqrt(x.a / 10, r)) return FieldScalar(Rational(0), Rational(0), Rational(0), r);
        return std::nullopt;
    }
    if (!qb && !qd) {  // x in Q(sqrt5): y = p + q*sqrt5 or sqrt2*(p + q*sqrt5)
        if (quad_sqrt(x.a, x.c, 5, p, q)) {
            FieldScalar y(p, Rational(0), q, Rational(0));
            return y.sign() > 0 ? y : -y;
        }
        if (quad_sqrt(x.a / 2, x.c / 2, 5, p, q)) {
            FieldScalar y(Rational(0), p, Rational(0), q);
            return y.sign() > 0 ? y : -y;
        }
        return std::nullopt;
    }
    if (!qc && !qd) {  // x in Q(sqrt2): y = p + q*sqrt2 or sqrt5*(p + q*sqrt2)
        if (quad_sqrt(x.a, x.b, 2, p, q)) {
            FieldScalar y(p, q, Rational(0), Rational(0));
            return y.sign() > 0 ? y : -y;
        }
        if (quad_sqrt(x.a / 5, x.b / 5, 2, p, q)) {
            FieldScalar y(Rational(0), Rational(0), p, q);
            return y.sign() > 0 ? y : -y;
        }
        return std::nullopt;
    }
    if (!qb && !qc) {  // x in Q(sqrt10): y = p + q*sqrt10 or p*sqrt2 + q*sqrt5
        if (quad_sqrt(x.a, x.d, 10, p, q)) {
            FieldScalar y(p, Rational(0), Rational(0), q);
            return y.sign() > 0 ? y : -y;
        }
        // (p*sqrt2 + q*sqrt5)^2 = 2p^2 + 5q^2 + 2pq*sqrt10
        // p^2 is a root of 2 z^2 - a z + 5 d^2 / 4... substitute w = 2 p^2:
        // w + 5 q^2 = a with q = d/(2p): w^2 - a w + 10 (d/2)^2 * ... handled below.
        {
            // solve 2p^2 + 5q^2 = a, 2pq = d: (2p^2) is a root of z^2 - a z + 10 d^2/4
            Rational disc = x.a * x.a - 10 * x.d * x.d, rd2;
            if (rational_sqrt(disc, rd2)) {
                for (int pick = 0; pick < 2; ++pick) {
                    Rational z = (x.a + (pick == 0 ? rd2 : -rd2)) / 2;  // = 2 p^2
                    Rational rp;
                    if (sgn(z) >= 0 && rational_sqrt(z / 2, rp) && sgn(rp) != 0) {
                        Rational rq = x.d / (2 * rp);
                        FieldScalar y(Rational(0), rp, rq, Rational(0));
                        if (y.sign() < 0) y = -y;
                        return y;
                    }
                }
            }
        }
        return std::nullopt;
    }
    return std::nullopt;  // full-degree radicands do not occur in this artifact
}

}  // namespace qp
