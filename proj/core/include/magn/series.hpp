#ifndef MAGN_SERIES_HPP
#define MAGN_SERIES_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "magn/rational.hpp"
#include "magn/tree.hpp"

namespace magn {

// Truncated power series a_0 + a_1 t + ... + a_nmax t^nmax. Binary operations
// truncate to the smaller of the two orders.
class Series {
 public:
  explicit Series(std::size_t nmax) : coeffs_(nmax + 1, 0) {}
  Series(std::vector<Rational> coeffs, std::size_t nmax);

  static Series constant(const Rational& c, std::size_t nmax);
  static Series variable(std::size_t nmax);  // t

  std::size_t nmax() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Series truncated(std::size_t nmax) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& scalar);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

Series derivative(const Series& f);  // order nmax - 1
Series integrate(const Series& f);   // order nmax + 1, zero constant term

// The following require f(0) = 0 and throw DomainError otherwise.
Series reciprocal1p(const Series& f);  // 1 / (1 + f)
Series log1p(const Series& f);         // log(1 + f)
Series sqrt1p(const Series& f);        // (1 + f)^(1/2), by Newton iteration

// f(g(t)); requires g(0) = 0.
Series compose(const Series& f, const Series& g);

struct DerivedSequence {
  std::vector<Rational> values;  // a'_1 .. a'_m
  bool integral = true;
};

// a'_n with sum a'_n t^n = t d/dt log(1 + sum a_n t^n).
DerivedSequence log_derive_sequence(std::span<const Rational> a);
DerivedSequence log_derive_sequence(std::span<const Integer> a);

std::vector<Integer> catalan_sequence(std::size_t m);        // c_1 .. c_m
std::vector<Integer> super_catalan_sequence(std::size_t m);  // C_1 .. C_m
std::vector<Integer> bounded_sequence(ArityBound bound, std::size_t m);
// c[N]'_1 .. c[N]'_m; integral by construction for tree counts.
std::vector<Integer> log_bounded_sequence(ArityBound bound, std::size_t m);

// sum dim Mag_N(n)/n! t^n = sum c[N]_n t^n
Series operad_generating_series(ArityBound bound, std::size_t nmax);
// log(1 + operad series) = sum c[N]'_n / n t^n
Series prim_generating_series(ArityBound bound, std::size_t nmax);

// e[N]_1..e[N]_nmax with c(t) = 1/(1 - e(t)) - 1.
std::vector<Rational> generators_from_catalan(ArityBound bound, std::size_t nmax);
std::vector<Rational> generators_from_counts(std::span<const Rational> c);

// "a0 + a1*t + a2*t^2 ..." with zero coefficients skipped.
std::string format_series(const Series& f);
std::ostream& operator<<(std::ostream& os, const Series& f);

}  // namespace magn

#endif  // MAGN_SERIES_HPP
