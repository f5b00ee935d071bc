#pragma once

#include <random>

#include "quatpoly/quaternion.hpp"

namespace qp::testutil {

inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline FieldScalar random_field(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline Quaternion random_quaternion(std::mt19937_64& rng) {
    return {random_field(rng), random_field(rng), random_field(rng), random_field(rng)};
}

}  // namespace qp::testutil
