#include "magn/rational.hpp"

#include <cctype>

#include "magn/errors.hpp"

namespace magn {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(std::string("expected ") + what, pos);
    return std::string(text.substr(start, pos - start));
  };
  std::string num = read_digits("numerator");
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits("denominator");
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator", pos);
  Rational r(Integer(num), d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace magn
