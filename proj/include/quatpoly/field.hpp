#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

namespace qp {

/// Exact rational with arbitrary-precision integers. GMP keeps values in
/// canonical form (reduced, positive denominator) through arithmetic.
using Rational = mpq_class;

/// Rational from num/den, canonicalized (the raw mpq_class(n,d) ctor is not).
Rational make_rational(long num, long den = 1);

/// Parse "n" or "n/d"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& r);

/// True iff r is the square of a rational; writes the nonnegative root.
bool rational_sqrt(const Rational& r, Rational& root);

/// Element of the real field Q(sqrt2, sqrt5): a + b*sqrt2 + c*sqrt5 + d*sqrt10.
///
/// This is the coordinate field for everything downstream: it contains the
/// golden ratio pair tau = (1+sqrt5)/2, sigma = (1-sqrt5)/2 and the 1/sqrt2
/// showing up in reflection normalization. All operations are exact.
class FieldScalar {
public:
    Rational a, b, c, d;

    FieldScalar() : a(0), b(0), c(0), d(0) {}
    FieldScalar(long n) : a(n), b(0), c(0), d(0) {}
    explicit FieldScalar(Rational ra) : a(std::move(ra)), b(0), c(0), d(0) {}
    FieldScalar(Rational ra, Rational rb, Rational rc, Rational rd)
        : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}

    static FieldScalar rational(long num, long den = 1) { return FieldScalar(make_rational(num, den)); }
    static FieldScalar sqrt2()  { return FieldScalar(Rational(0), Rational(1), Rational(0), Rational(0)); }
    static FieldScalar sqrt5()  { return FieldScalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
    static FieldScalar sqrt10() { return FieldScalar(Rational(0), Rational(0), Rational(0), Rational(1)); }
    /// tau = (1+sqrt5)/2
    static FieldScalar tau()    { return FieldScalar(make_rational(1, 2), Rational(0), make_rational(1, 2), Rational(0)); }
    /// sigma = (1-sqrt5)/2
    static FieldScalar sigma()  { return FieldScalar(make_rational(1, 2), Rational(0), make_rational(-1, 2), Rational(0)); }
    /// 1/sqrt2 = sqrt2/2
    static FieldScalar inv_sqrt2() { return FieldScalar(Rational(0), make_rational(1, 2), Rational(0), Rational(0)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }
    bool is_rational() const { return sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }

    FieldScalar operator-() const { return {-a, -b, -c, -d}; }
    FieldScalar operator+(const FieldScalar& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    FieldScalar operator-(const FieldScalar& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }
    FieldScalar& operator+=(const FieldScalar& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }
    FieldScalar& operator-=(const FieldScalar& o) { a -= o.a; b -= o.b; c -= o.c; d -= o.d; return *this; }
    FieldScalar& operator*=(const FieldScalar& o) { *this = *this * o; return *this; }

    bool operator==(const FieldScalar& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// Galois conjugate sqrt2 -> -sqrt2.
    FieldScalar conj_sqrt2() const { return {a, -b, c, -d}; }
    /// Galois conjugate sqrt5 -> -sqrt5; exchanges tau <-> sigma (the tilde mirror).
    FieldScalar conj_sqrt5() const { return {a, b, -c, -d}; }

    /// Multiplicative inverse via the conjugate tower; throws on zero.
    FieldScalar inverse() const;

    /// Exact sign in {-1,0,+1}. Decides sign(u + v*sqrt5) with u,v in Q(sqrt2)
    /// by comparing u^2 against 5 v^2, recursing into Q(sqrt2) where
    /// sign(a + b*sqrt2) compares a^2 against 2 b^2. No floating point.
    int sign() const;

    double to_double() const;

    /// Canonical textual form "a + b*r2 + c*r5 + d*r10" with reduced fractions.
    std::string str() const;
};

inline FieldScalar operator*(long n, const FieldScalar& x) { return FieldScalar(n) * x; }

/// Structural (lexicographic) order on coefficients; NOT the numeric order.
/// Used for canonical sorting and ordered containers.
int compare_lex(const FieldScalar& x, const FieldScalar& y);
inline bool operator<(const FieldScalar& x, const FieldScalar& y) { return compare_lex(x, y) < 0; }

/// Numeric comparison via exact sign of the difference.
inline int compare_real(const FieldScalar& x, const FieldScalar& y) { return (x - y).sign(); }

/// Exact square root if it exists in one of the subfield forms that occur in
/// practice (rational multiples of 1, sqrt2, sqrt5, sqrt10 and the quadratic
/// subfields Q(sqrt2), Q(sqrt5), Q(sqrt10) together with their sqrt2/sqrt5
/// multiples). Returns the nonnegative root, or nullopt.
std::optional<FieldScalar> field_sqrt(const FieldScalar& x);

}  // namespace qp
