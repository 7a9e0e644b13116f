#ifndef MAGN_HOPF_HPP
#define MAGN_HOPF_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "magn/element.hpp"

namespace magn {

using TreePair = std::pair<Tree, Tree>;

// Terms of a tensor are ordered by left degree (descending), then by the
// left tree, then by the right tree.
struct TensorTermOrder {
  bool operator()(const TreePair& a, const TreePair& b) const;
};

// Element of K{X}_N (x) K{X}_N stored as flat pairs of monomials.
class TensorElement {
 public:
  using Terms = std::map<TreePair, Rational, TensorTermOrder>;

  explicit TensorElement(ArityBound bound = ArityBound::omega()) : bound_(bound) {}

  ArityBound bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Tree& left, const Tree& right) const;
  void add_term(const Tree& left, const Tree& right, const Rational& coeff);

  // Component of bidegree (left_degree, right_degree).
  TensorElement slice(std::size_t left_degree, std::size_t right_degree) const;
  // a (x) b -> b (x) a
  TensorElement swapped() const;

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement& operator*=(const Rational& scalar);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

 private:
  ArityBound bound_;
  Terms terms_;
};

TensorElement tensor(const Element& a, const Element& b);

// Diagonal Delta_a: on a tree, the sum over leaf subsets I of
// red(T|I) (x) red(T|I^c).
TensorElement coproduct(const Tree& t, ArityBound bound);
TensorElement coproduct(const Element& e);

// Delta(e) - e (x) 1 - 1 (x) e; requires a zero constant term.
TensorElement reduced_coproduct(const Element& e);

bool is_primitive(const Element& e);

// The coefficient slice with Delta(f) = sum_T T (x) partial(T, f).
Element partial(const Tree& s, const Element& f);

// Planar shuffle product dual to Delta_a.
Element shuffle(const Element& f, const Element& g);
Element shuffle(const Tree& t1, const Tree& t2, ArityBound bound);
// Component-wise shuffle on tensors: (a (x) b)(c (x) d) = (a sh c) (x) (b sh d).
TensorElement shuffle(const TensorElement& f, const TensorElement& g);

// Dual-basis pairing <T, S> = [T == S], extended bilinearly.
Rational pairing(const Element& f, const Element& g);
Rational pairing(const TensorElement& f, const TensorElement& g);

// Dual of vee^2: T (x) 1 + 1 (x) T (+ T1 (x) T2 when T = vee^2(T1, T2)).
// The unit maps to 1 (x) 1.
TensorElement nabla2(const Element& f);

// vee^k on A (x) A, acting component-wise with the coherent unit action.
TensorElement apply_generator(std::size_t k, std::span<const TensorElement> args);

struct HopfReport {
  bool ok = true;
  std::size_t monomials_checked = 0;
  std::string failure;  // first counterexample
};

// Checks coassociativity, cocommutativity, the morphism property and the
// connected-graded filtration on every tree of degree <= max_degree.
HopfReport verify_hopf_axioms(ArityBound bound, std::size_t num_vars, std::size_t max_degree);

// Literal format: "c*left#right" terms joined by " + " / " - "; "0" for zero.
std::string format_tensor(const TensorElement& t);
TensorElement parse_tensor(std::string_view text, ArityBound bound);

std::ostream& operator<<(std::ostream& os, const TensorElement& t);

}  // namespace magn

#endif  // MAGN_HOPF_HPP
