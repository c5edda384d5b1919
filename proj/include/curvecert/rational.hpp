#ifndef CURVECERT_RATIONAL_HPP
#define CURVECERT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

#include "curvecert/errors.hpp"

namespace curvecert {

// Exact arbitrary-precision rationals. mpq_class keeps values canonical
// (reduced, positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// Parses "num", "num/den" or a plain decimal-free integer string.
Rational rational_from_string(const std::string& s);

// "num/den" if den != 1, else "num".
std::string rational_to_string(const Rational& q);

// Decimal rendering with the given number of fractional digits (for SVG/CSV).
std::string rational_to_decimal(const Rational& q, int digits = 6);

Rational rational_pow(const Rational& base, unsigned long e);

// 10^-k as an exact rational.
Rational pow10_neg(unsigned k);

inline Rational rational_abs(const Rational& q) { return abs(q); }

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a > b ? a : b; }

// gcd of the numerators' integers after clearing denominators; used for
// content normalization of coefficient vectors.
Integer integer_content(const std::vector<Rational>& v);
Integer common_denominator(const std::vector<Rational>& v);

} // namespace curvecert

#endif
