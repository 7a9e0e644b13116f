#ifndef MAGN_SYMFUN_HPP
#define MAGN_SYMFUN_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "magn/rational.hpp"
#include "magn/series.hpp"
#include "magn/tree.hpp"

namespace magn {

// Integer partition with weakly decreasing positive parts.
// Ordered by weight, then reverse-lexicographically ([3] before [2,1]).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<unsigned> parts);
  explicit Partition(std::vector<unsigned> parts);  // sorts; zero parts rejected

  std::span<const unsigned> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned weight() const { return weight_; }
  // Multiplicity of part i.
  unsigned multiplicity(unsigned i) const;

  std::string to_string() const;  // "[3,1]"

  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned weight_ = 0;
};

// All partitions of n, [n] first.
std::vector<Partition> partitions(unsigned n);

int mobius(unsigned d);
Integer z_lambda(const Partition& lambda);
// Irreducible character chi^mu evaluated at cycle type lambda (Murnaghan-Nakayama).
Integer mn_character(const Partition& mu, const Partition& lambda);
// Dimension of the Specht module S^mu (hook length formula).
Integer specht_dimension(const Partition& mu);

// Rational combination of power-sum monomials p_lambda.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational>;

  SymFunc() = default;
  static SymFunc power_sum(const Partition& lambda, const Rational& coeff = 1);
  static SymFunc constant(const Rational& c) { return power_sum(Partition(), c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& coeff);

  SymFunc homogeneous_part(unsigned weight) const;
  SymFunc truncated(unsigned max_weight) const;
  bool is_homogeneous() const;
  unsigned min_weight() const;  // 0 for the zero function

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& scalar);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const Rational& s, SymFunc a) { return a *= s; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc& a, const SymFunc& b) = default;

 private:
  Terms terms_;
};

SymFunc multiply_truncated(const SymFunc& a, const SymFunc& b, unsigned max_weight);

// p_d o f: the ring map p_k -> p_{dk}.
SymFunc plethysm_power(unsigned d, const SymFunc& f);

// Plethystic Log(1 + f) truncated to weight max_weight; f must have no
// weight-0 term.
SymFunc sf_log(const SymFunc& f, unsigned max_weight);

// sum_{k <= max_weight} c[N]_k p_1^k
SymFunc ch_operad(ArityBound bound, unsigned max_weight);
// (1/n) sum_{d | n} mu(d) c[N]'_{n/d} p_d^{n/d}
SymFunc ch_prim(unsigned n, ArityBound bound);

// Coefficients of a homogeneous f in the Schur basis.
std::map<Partition, Rational> to_schur(const SymFunc& f);

// Frobenius characteristic sum_lambda chi(lambda) p_lambda / z_lambda.
SymFunc from_class_function(const std::map<Partition, Rational>& values);

// p_1 -> t, p_k -> 0 for k > 1.
Series rank_morphism(const SymFunc& f, std::size_t nmax);

// Multigraded Witt formula for the binary operad with degree-1 generators:
// (1/|n|) sum_{k d = n} mu(k) c'_{|d|} multinomial(|d|; d) prod r_i^{d_i}.
Integer witt_multigraded(std::span<const unsigned> multidegree, std::span<const unsigned> generators);

// "c*p[3,1] + ..." and "c*s[3,1] + ...".
std::string format_symfunc(const SymFunc& f);
std::string format_schur(const std::map<Partition, Rational>& coeffs);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace magn

#endif  // MAGN_SYMFUN_HPP
