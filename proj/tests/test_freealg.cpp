#include <doctest.h>

#include <array>
#include <random>

#include "magn/element.hpp"
#include "magn/errors.hpp"
#include "oracles.hpp"

using namespace magn;

namespace {

const ArityBound kBin = ArityBound::finite(2);
const ArityBound kTern = ArityBound::finite(3);
const ArityBound kOmega = ArityBound::omega();

Element E(const char* s, ArityBound b = kBin) { return parse_element(s, b); }
Element X(Label k, ArityBound b = kBin) { return Element::generator(k, b); }
Element one(ArityBound b = kBin) { return Element::unit(b); }

}  // namespace

TEST_CASE("combine") {
  std::vector<std::pair<Rational, Element>> cancel{{1, X(1)}, {-1, X(1)}};
  CHECK(combine(cancel).is_zero());
  std::vector<std::pair<Rational, Element>> add{{2, X(1)}, {3, X(1)}};
  CHECK(combine(add) == 5 * X(1));
  std::vector<std::pair<Rational, Element>> halves{{Rational(1, 2), E("1*(x1 x2)")}, {Rational(1, 2), E("1*(x1 x2)")}};
  CHECK(combine(halves) == E("1*(x1 x2)"));
  std::vector<std::pair<Rational, Element>> mixed{{1, X(1)}, {1, X(1, kOmega)}};
  CHECK_THROWS_AS(combine(mixed), BoundError);
  CHECK_THROWS_AS(X(1) + X(1, kOmega), BoundError);
}

TEST_CASE("elements respect their bound") {
  Element e(kBin);
  CHECK_THROWS_AS(e.add_term(parse_tree("(x1 x2 x3)"), 1), BoundError);
  CHECK_NOTHROW(promote(E("1*(x1 x2)"), kOmega));
  CHECK(promote(E("1*(x1 x2)"), kOmega).bound() == kOmega);
  CHECK_THROWS_AS(promote(E("1*(x1 x2 x3)", kOmega), kBin), BoundError);
  e.add_term(Tree::leaf(1), 0);
  CHECK(e.is_zero());
}

TEST_CASE("apply_generator examples") {
  std::array<Element, 2> a{one(), X(1)};
  CHECK(apply_generator(2, a) == X(1));
  std::array<Element, 3> b{X(1, kTern), one(kTern), X(2, kTern)};
  CHECK(apply_generator(3, b) == E("1*(x1 x2)", kTern));
  std::array<Element, 2> c{one(), one()};
  CHECK(apply_generator(2, c) == one());
  std::array<Element, 3> d{X(1), X(2), X(3)};
  CHECK_THROWS_AS(apply_generator(3, d), BoundError);
  std::array<Element, 1> e{X(1)};
  CHECK_THROWS_AS(apply_generator(1, e), DomainError);
  std::array<Element, 2> f{X(1), X(2)};
  CHECK_THROWS_AS(apply_generator(3, f), DomainError);
  // one surviving argument is returned for every arity
  std::array<Element, 4> g{one(kOmega), one(kOmega), E("1*(x1 x2)", kOmega), one(kOmega)};
  CHECK(apply_generator(4, g) == E("1*(x1 x2)", kOmega));
}

TEST_CASE("apply_generator is multilinear and grafts monomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Element a = oracle::random_element(rng, 1 + trial % 3, 2, kOmega);
    Element a2 = oracle::random_element(rng, 1 + trial % 3, 2, kOmega);
    Element b = oracle::random_element(rng, 2, 2, kOmega);
    Element c = oracle::random_element(rng, 1, 2, kOmega);
    Rational s(trial - 7, 3);
    s.canonicalize();
    std::array<Element, 3> lhs{a + s * a2, b, c};
    std::array<Element, 3> p1{a, b, c};
    std::array<Element, 3> p2{a2, b, c};
    CHECK(apply_generator(3, lhs) == apply_generator(3, p1) + s * apply_generator(3, p2));
    std::array<Element, 3> mid{b, a + a2, c};
    std::array<Element, 3> m1{b, a, c};
    std::array<Element, 3> m2{b, a2, c};
    CHECK(apply_generator(3, mid) == apply_generator(3, m1) + apply_generator(3, m2));
  }
  for (const Tree& t1 : homogeneous_basis(2, 2, kOmega))
    for (const Tree& t2 : homogeneous_basis(1, 2, kOmega)) {
      std::array<Element, 2> args{Element::monomial(t1, kOmega), Element::monomial(t2, kOmega)};
      CHECK(apply_generator(2, args) == Element::monomial(graft({t1, t2}), kOmega));
    }
}

TEST_CASE("multilinear_basis") {
  std::vector<Tree> b2 = multilinear_basis(2, kBin);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == parse_tree("(x1 x2)"));
  CHECK(b2[1] == parse_tree("(x2 x1)"));
  CHECK(multilinear_basis(3, kBin).size() == 12);
  CHECK(multilinear_basis(3, kOmega).size() == 18);
  CHECK(multilinear_basis(4, kTern).size() == 10 * 24);
  CHECK_THROWS_AS(multilinear_basis(0, kBin), DomainError);
  std::vector<Tree> b4 = multilinear_basis(4, kOmega);
  CHECK(std::is_sorted(b4.begin(), b4.end()));
  CHECK(std::adjacent_find(b4.begin(), b4.end()) == b4.end());
}

TEST_CASE("homogeneous component dimensions") {
  for (ArityBound b : {kBin, kTern, kOmega})
    for (std::size_t n = 1; n <= 5; ++n)
      for (std::size_t r = 1; r <= 2; ++r) {
        Integer expected = c_bounded(b, n);
        for (std::size_t i = 0; i < n; ++i) expected *= static_cast<unsigned long>(r);
        std::vector<Tree> basis = homogeneous_basis(n, r, b);
        CHECK(Integer(static_cast<unsigned long>(basis.size())) == expected);
        CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
      }
  std::vector<Label> labels{1, 1, 2};
  CHECK(component_basis(labels, kBin).size() == 2 * 3);
}

TEST_CASE("substitute examples") {
  Element e = E("2*(x1 x2) - 1/3*x2 + 1*1");
  std::array<Element, 1> id{e};
  CHECK(substitute(X(1), id) == e);
  std::array<Element, 2> swap{X(2), X(1)};
  CHECK(substitute(E("1*(x1 x2)"), swap) == E("1*(x2 x1)"));
  std::array<Element, 2> args{X(1), E("1*(x2 x3)")};
  CHECK(substitute(E("1*(x1 x2) - 1*(x2 x1)"), args) == E("1*(x1 (x2 x3)) - 1*((x2 x3) x1)"));
  CHECK_THROWS_AS(substitute(E("1*(x1 x1)"), swap), DomainError);
  std::array<Element, 3> three{X(1), X(2), X(3)};
  CHECK_THROWS_AS(substitute(E("1*(x1 x2)"), three), DomainError);
  // unit arguments follow the coherent unit action
  std::array<Element, 2> with_unit{one(), X(3)};
  CHECK(substitute(E("1*(x1 x2)"), with_unit) == X(3));
}

TEST_CASE("substitution is associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    // p(x1,x2), q1(x1,x2), q2(x1), r's in x1..x3
    auto multilinear = [&](std::size_t n) {
      std::vector<Tree> basis = multilinear_basis(n, kOmega);
      Element e(kOmega);
      for (int i = 0; i < 3; ++i) e.add_term(basis[rng() % basis.size()], static_cast<long>(rng() % 5) - 2);
      return e;
    };
    Element p = multilinear(2);
    Element q1 = multilinear(2);
    Element q2 = multilinear(1);
    std::array<Element, 3> r{oracle::random_element(rng, 1, 2, kOmega), oracle::random_element(rng, 2, 2, kOmega),
                             oracle::random_element(rng, 1, 2, kOmega)};
    // p(q1(x1,x2), q2(x3)) as a 3-ary operation
    std::array<Element, 1> shift{X(3, kOmega)};
    std::array<Element, 2> inner{q1, substitute(q2, shift)};
    Element pq = substitute(p, inner);
    Element lhs = substitute(pq, r);
    std::array<Element, 2> r12{r[0], r[1]};
    std::array<Element, 1> r3{r[2]};
    std::array<Element, 2> composed{substitute(q1, r12), substitute(q2, r3)};
    Element rhs = substitute(p, composed);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("relabel is the symmetric group action") {
  Element e = E("1*((x1 x2) x3) - 2*(x3 (x2 x1))");
  std::vector<Label> s{2, 3, 1};
  std::vector<Label> t{2, 1, 3};
  std::vector<Label> st(3);
  for (std::size_t i = 0; i < 3; ++i) st[i] = s[t[i] - 1];
  CHECK(relabel(relabel(e, t), s) == relabel(e, st));
  CHECK(relabel(e, s) == E("1*((x2 x3) x1) - 2*(x1 (x3 x2))"));
}

TEST_CASE("element literals") {
  Element e = E("1*(x1 x2) - 1*(x2 x1)");
  CHECK(format_element(e) == "1*(x1 x2) - 1*(x2 x1)");
  CHECK(E(format_element(e).c_str()) == e);
  CHECK(format_element(Element(kBin)) == "0");
  CHECK(E("0").is_zero());
  CHECK(format_element(E("-3/6*x1 + 2*1")) == "2*1 - 1/2*x1");
  CHECK(E("1/2*x1 + 1/2*x1") == X(1));
  for (const char* bad : {"x1", "1*", "1*(x1 x2) + ", "1*(x1 x2) +1*x1", "a*x1", "1/0*x1", "1*(x1 x2 x3)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(E(bad), Error);
  }
  CHECK(e.homogeneous_degree() == std::optional<std::size_t>(2));
  CHECK_FALSE(E("1*x1 + 1*(x1 x2)").homogeneous_degree().has_value());
  CHECK(E("3*1").constant_term() == 3);
}
