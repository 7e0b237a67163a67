#pragma once

#include <gmpxx.h>

#include <string>

namespace gebra {

// Exact arbitrary-precision rational numbers.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "3", "-7/2"
inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace gebra
