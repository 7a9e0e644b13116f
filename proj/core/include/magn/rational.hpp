#ifndef MAGN_RATIONAL_HPP
#define MAGN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace magn {

// GMP values are always kept canonical (reduced, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Accepts "p" or "p/q" with an optional leading '-'; throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace magn

#endif  // MAGN_RATIONAL_HPP
