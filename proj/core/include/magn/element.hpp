#ifndef MAGN_ELEMENT_HPP
#define MAGN_ELEMENT_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magn/rational.hpp"
#include "magn/tree.hpp"

namespace magn {

// Element of the free unitary Mag_N-algebra K{X}_N: a finite rational
// combination of labeled trees. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Tree, Rational>;

  explicit Element(ArityBound bound = ArityBound::omega()) : bound_(bound) {}

  static Element monomial(const Tree& t, ArityBound bound, const Rational& coeff = 1);
  static Element unit(ArityBound bound) { return monomial(Tree::empty(), bound); }
  static Element generator(Label k, ArityBound bound) { return monomial(Tree::leaf(k), bound); }

  ArityBound bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Tree& t) const;
  Rational constant_term() const { return coefficient(Tree::empty()); }
  // Common leaf count of all terms; nullopt for zero or mixed degrees.
  std::optional<std::size_t> homogeneous_degree() const;

  // Throws BoundError if t violates the arity bound.
  void add_term(const Tree& t, const Rational& coeff);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

 private:
  ArityBound bound_;
  Terms terms_;
};

void require_same_bound(ArityBound a, ArityBound b);

// Rational linear combination sum c_i * e_i; all operands share one bound.
Element combine(std::span<const std::pair<Rational, Element>> parts);

// Reinterprets e inside K{X}_{N'} for N' >= N.
Element promote(const Element& e, ArityBound target);

// Generator vee^k applied with the coherent unit action: empty arguments are
// dropped, one survivor is returned as is, none gives 1.
Element apply_generator(std::size_t k, std::span<const Element> args);
// The same rule on tree monomials (no bound check).
Tree apply_generator_monomials(std::span<const Tree> args);

// Trees of degree n with leaves labeled bijectively by x1..xn.
std::vector<Tree> multilinear_basis(std::size_t n, ArityBound bound);
// Trees whose multiset of leaf labels is exactly `labels`.
std::vector<Tree> component_basis(std::span<const Label> labels, ArityBound bound);
// All trees of degree n with labels drawn from x1..x_num_vars.
std::vector<Tree> homogeneous_basis(std::size_t n, std::size_t num_vars, ArityBound bound);

// True when every term uses each of x1..xn exactly once.
bool is_multilinear(const Element& e, std::size_t n);

// Replaces x_i by args[i-1] in a multilinear operation and expands.
Element substitute(const Element& operation, std::span<const Element> args);

// Sigma_n action: x_i -> x_{perm[i-1]} (perm is a permutation of 1..n).
Element relabel(const Element& e, std::span<const Label> perm);

// Literal format: "c*tree" terms joined by " + " / " - "; "0" for zero.
std::string format_element(const Element& e);
Element parse_element(std::string_view text, ArityBound bound);

std::ostream& operator<<(std::ostream& os, const Element& e);

}  // namespace magn

#endif  // MAGN_ELEMENT_HPP
