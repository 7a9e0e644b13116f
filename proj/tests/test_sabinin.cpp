#include <doctest.h>

#include <array>

#include "magn/errors.hpp"
#include "magn/hopf.hpp"
#include "magn/prim.hpp"
#include "magn/sabinin.hpp"

using namespace magn;

namespace {

const ArityBound kBin = ArityBound::finite(2);
const ArityBound kOmega = ArityBound::omega();

Element X(Label k, ArityBound b = kBin) { return Element::generator(k, b); }
Element E(const char* s, ArityBound b = kBin) { return parse_element(s, b); }

}  // namespace

TEST_CASE("basic operations") {
  Element x = X(1), y = X(2), z = X(3);
  CHECK(commutator(x, y) == E("1*(x1 x2) - 1*(x2 x1)"));
  CHECK(associator(x, y, z) == E("1*((x1 x2) x3) - 1*(x1 (x2 x3))"));
  CHECK(angle(x, y, z) == associator(x, z, y) - associator(x, y, z));
  CHECK(brace3(x, y, z) == associator(x, z, y) + associator(x, y, z));
  CHECK(angle(x, z, y) == -angle(x, y, z));
  CHECK(brace3(x, z, y) == brace3(x, y, z));
  CHECK(angle(x, y, y).is_zero());
  std::array<Element, 3> w{x, y, z};
  CHECK(left_normed_product(w) == E("1*((x1 x2) x3)"));
  CHECK_THROWS_AS(left_normed_product(std::span<const Element>{}), DomainError);
  CHECK_THROWS_AS(assoc_dev(x, y, z), BoundError);
  Element xo = X(1, kOmega), yo = X(2, kOmega), zo = X(3, kOmega);
  CHECK(assoc_dev(xo, yo, zo) == E("1*((x1 x2) x3) - 1*(x1 x2 x3)", kOmega));
}

TEST_CASE("operations on distinct generators are primitive") {
  Element x = X(1), y = X(2), z = X(3), t = X(4);
  CHECK(is_primitive(commutator(x, y)));
  CHECK(is_primitive(angle(x, y, z)));
  CHECK(is_primitive(brace3(x, y, z)));
  CHECK(is_primitive(associator(x, y, z)));
  CHECK_FALSE(is_primitive(product(x, y)));
  CHECK(is_primitive(op_p(x, t, y, z)));
  CHECK(is_primitive(op_q(x, t, y, z)));
  Element xo = X(1, kOmega), yo = X(2, kOmega), zo = X(3, kOmega);
  CHECK(is_primitive(assoc_dev(xo, yo, zo)));
  // primitives composed with primitives
  CHECK(is_primitive(angle(commutator(x, y), z, t)));
  CHECK(is_primitive(commutator(brace3(x, y, z), t)));
  std::array<Element, 2> xs{x, t};
  std::array<Element, 1> ys{y};
  std::array<Element, 2> ys2{y, z};
  std::array<Element, 1> xs1{x};
  CHECK(is_primitive(su_P(xs, ys, z)));
  CHECK(is_primitive(angle_word(xs, y, z)));
  CHECK(is_primitive(phi(xs1, ys2)));
  CHECK(is_primitive(brace_word(std::span<const Element>(xs).first(1), std::array<Element, 3>{y, z, t})));
  Element u = X(5);
  std::array<Element, 3> xs3{x, t, u};
  CHECK(is_primitive(angle_word(xs3, y, z)));
  CHECK(is_primitive(phi(xs, ys2)));
}

TEST_CASE("the recursion reproduces p and q") {
  Element x = X(1), t = X(2), y = X(3), z = X(4);
  std::array<Element, 1> one_x{x};
  std::array<Element, 1> one_y{y};
  CHECK(su_P(one_x, one_y, z) == associator(x, y, z));
  std::array<Element, 2> xt{x, t};
  CHECK(su_P(xt, one_y, z) == op_p(x, t, y, z));
  std::array<Element, 2> ty{t, y};
  CHECK(su_P(one_x, ty, z) == op_q(x, t, y, z));
  CHECK(op_p(x, t, y, z) == associator(product(x, t), y, z) - product(x, associator(t, y, z)) -
                                product(t, associator(x, y, z)));
  CHECK_THROWS_AS(su_P(std::span<const Element>{}, one_y, z), DomainError);
  CHECK_THROWS_AS(su_P(one_x, std::span<const Element>{}, z), DomainError);
}

TEST_CASE("angle words and braces") {
  Element x = X(1), t = X(2), y = X(3), z = X(4);
  CHECK(angle_word(std::span<const Element>{}, y, z) == -commutator(y, z));
  std::array<Element, 1> one_x{x};
  CHECK(angle_word(one_x, y, z) == angle(x, y, z));
  std::array<Element, 2> xt{x, t};
  CHECK(angle_word(xt, y, z) == op_p(x, t, z, y) - op_p(x, t, y, z));
  std::array<Element, 2> yz{y, z};
  Element ph = phi(one_x, yz);
  std::array<Element, 1> py{y};
  std::array<Element, 1> pz{z};
  CHECK(ph == Rational(1, 2) * (su_P(one_x, py, z) + su_P(one_x, pz, y)));
  CHECK(brace_word(one_x, yz) == Rational(2) * ph);
  CHECK(brace_word(one_x, yz) == brace3(x, y, z));
  CHECK_THROWS_AS(phi(one_x, py), DomainError);
  // phi is symmetric in each word
  std::array<Element, 2> tx{t, x};
  std::array<Element, 2> zy{z, y};
  CHECK(phi(xt, yz) == phi(tx, zy));
}

TEST_CASE("Akivis relation") {
  Element a = X(1), b = X(2), c = X(3);
  Element angles = angle(a, b, c) + angle(b, c, a) + angle(c, a, b);
  Element jacobi = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                   commutator(commutator(c, a), b);
  // with <x,y,z> = (x,z,y) - (x,y,z) the cyclic sums cancel
  CHECK((angles + jacobi).is_zero());
  CHECK_FALSE(jacobi.is_zero());
}

TEST_CASE("degree-four description") {
  DescriptionReport r = verify_degree4_description();
  for (const Claim& c : r.claims) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
  CHECK(r.ok());
  CHECK(r.prim_dimension == 78);
  CHECK(r.rank_commutator_span == 65);
  CHECK(r.rank_with_angle_words == 68);
  CHECK(r.rank_total == 78);
}
