#pragma once

#include <gmpxx.h>
#include <string>

namespace axial {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// n = s^2 * m with m square-free, n > 0.
void square_free_decompose(const Integer& n, Integer& s, Integer& m);

// true iff q is the square of a rational.
bool is_rational_square(const Rational& q);

}  // namespace axial
