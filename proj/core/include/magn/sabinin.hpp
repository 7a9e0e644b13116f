#ifndef MAGN_SABININ_HPP
#define MAGN_SABININ_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "magn/element.hpp"
#include "magn/prim.hpp"

namespace magn {

// Products below are vee^2; words are multiplied from left to right.
Element product(const Element& a, const Element& b);
Element left_normed_product(std::span<const Element> word);  // requires a nonempty word

Element commutator(const Element& x, const Element& y);                  // [x,y] = xy - yx
Element associator(const Element& x, const Element& y, const Element& z);  // (xy)z - x(yz)
Element angle(const Element& x, const Element& y, const Element& z);       // (x,z,y) - (x,y,z)
Element brace3(const Element& x, const Element& y, const Element& z);      // (x,z,y) + (x,y,z)
// (x,y,z)_t = vee^2(vee^2(x,y),z) - vee^3(x,y,z); needs arity bound >= 3.
Element assoc_dev(const Element& x, const Element& y, const Element& z);
// p(x,t,y,z) = (xt,y,z) - x(t,y,z) - t(x,y,z)
Element op_p(const Element& x, const Element& t, const Element& y, const Element& z);
// q(x,t,y,z) = (x,ty,z) - y(x,t,z) - t(x,y,z)
Element op_q(const Element& x, const Element& t, const Element& y, const Element& z);

// P(xs; ys; z) = (xs, ys, z) - sum' xs_(1) ys_(1) P(xs_(2); ys_(2); z), where
// the sum runs over splittings into (subsequence, complement) with xs_(2) and
// ys_(2) nonempty and xs_(1), ys_(1) not both empty.
Element su_P(std::span<const Element> xs, std::span<const Element> ys, const Element& z);

// <xs | y | z>: -[y,z] for empty xs, P(xs; z; y) - P(xs; y; z) otherwise.
Element angle_word(std::span<const Element> xs, const Element& y, const Element& z);
// Phi(xs | ys) = sum over tau, delta of P(xs_tau; ys_delta(1..n-1); ys_delta(n)) / (m! n!)
Element phi(std::span<const Element> xs, std::span<const Element> ys);
// m! n! Phi(xs | ys)
Element brace_word(std::span<const Element> xs, std::span<const Element> ys);

struct Claim {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct DescriptionReport {
  std::vector<Claim> claims;
  std::size_t prim_dimension = 0;
  std::size_t rank_commutator_span = 0;  // iterated commutators and the six families
  std::size_t rank_with_angle_words = 0;
  std::size_t rank_total = 0;
  bool ok() const;
};

// Degree-3 and degree-4 descriptions of Prim Mag by primitive operations.
DescriptionReport verify_degree4_description(const PrimOptions& opts = {});

}  // namespace magn

#endif  // MAGN_SABININ_HPP
