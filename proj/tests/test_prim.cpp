#include <doctest.h>

#include <numeric>

#include "magn/errors.hpp"
#include "magn/hopf.hpp"
#include "magn/prim.hpp"
#include "magn/series.hpp"
#include "magn/symfun.hpp"

using namespace magn;

namespace {

const ArityBound kBin = ArityBound::finite(2);
const ArityBound kTern = ArityBound::finite(3);
const ArityBound kOmega = ArityBound::omega();

std::vector<Label> iota_labels(std::size_t n) {
  std::vector<Label> l(n);
  std::iota(l.begin(), l.end(), Label{1});
  return l;
}

// Checks the PBW statement on one component and returns the complement size.
std::size_t check_pbw(const std::vector<Label>& labels, ArityBound b) {
  Basis prim = primitive_basis(labels, b);
  std::vector<Basis> lower = lower_primitive_bases(labels, b);
  std::vector<Element> comp = pbw_complement_basis(labels, b, lower);
  std::vector<Element> all = prim.vectors;
  all.insert(all.end(), comp.begin(), comp.end());
  CAPTURE(labels.size());
  CHECK(all.size() == prim.ambient.size());
  CHECK(rank(all) == prim.ambient.size());
  for (const Element& f : prim.vectors)
    for (const Element& g : comp) CHECK(pairing(f, g) == 0);
  return comp.size();
}

}  // namespace

TEST_CASE("primitive basis examples") {
  Basis b2 = primitive_basis_multilinear(2, kBin);
  REQUIRE(b2.dimension() == 1);
  Element comm = parse_element("1*(x1 x2) - 1*(x2 x1)", kBin);
  CHECK(b2.coordinates(comm).has_value());
  CHECK(b2.vectors[0] == -comm);
  CHECK(b2.leading[0] == parse_tree("(x2 x1)"));
  CHECK(primitive_basis_multilinear(1, kBin).dimension() == 1);
  CHECK(primitive_basis_multilinear(3, kBin).dimension() == 8);
  CHECK(primitive_basis_multilinear(3, kOmega).dimension() == 14);
  std::vector<Label> xx{1, 1};
  CHECK(primitive_basis(xx, kBin).dimension() == 0);
  CHECK_THROWS_AS(primitive_basis_multilinear(0, kBin), DomainError);
}

TEST_CASE("basis vectors are primitive and normalized") {
  for (ArityBound b : {kBin, kTern, kOmega})
    for (std::size_t n = 1; n <= 4; ++n) {
      if (b == kOmega && n == 4) continue;
      Basis basis = primitive_basis_multilinear(n, b);
      CHECK(basis.leading.size() == basis.dimension());
      CHECK(rank(basis.vectors) == basis.dimension());
      for (std::size_t i = 0; i < basis.dimension(); ++i) {
        const Element& v = basis.vectors[i];
        CHECK(is_primitive(v));
        CHECK(v.constant_term() == 0);
        CHECK(v.homogeneous_degree() == std::optional<std::size_t>(n));
        CHECK(is_multilinear(v, n));
        for (std::size_t j = 0; j < basis.dimension(); ++j) CHECK(v.coefficient(basis.leading[j]) == (i == j ? 1 : 0));
      }
    }
}

TEST_CASE("kernel dimensions match the formula") {
  std::vector<long> bin{1, 1, 8, 78, 1104};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(prim_dim_formula(n, kBin) == bin[n - 1]);
    CHECK(primitive_dimension_multilinear(n, kBin) == static_cast<std::size_t>(bin[n - 1]));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(Integer(static_cast<unsigned long>(primitive_dimension_multilinear(n, kTern))) == prim_dim_formula(n, kTern));
    CHECK(Integer(static_cast<unsigned long>(primitive_dimension_multilinear(n, kOmega))) == prim_dim_formula(n, kOmega));
  }
  std::vector<long> omega{1, 1, 14, 198};
  for (std::size_t n = 1; n <= 4; ++n) CHECK(prim_dim_formula(n, kOmega) == omega[n - 1]);
  // the formula from the series module
  for (ArityBound b : {kBin, kTern, kOmega}) {
    std::vector<Integer> lb = log_bounded_sequence(b, 7);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(prim_dim_formula(n, b) == factorial(static_cast<unsigned>(n - 1)) * lb[n - 1]);
  }
}

TEST_CASE("kernel dimensions at degree five" * doctest::timeout(120)) {
  CHECK(Integer(static_cast<unsigned long>(primitive_dimension_multilinear(5, kTern))) == prim_dim_formula(5, kTern));
  CHECK(prim_dim_formula(5, kTern) == 3384);
}

TEST_CASE("dimension and full basis agree") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(primitive_dimension_multilinear(n, kBin) == primitive_basis_multilinear(n, kBin).dimension());
    std::vector<Label> l(n, 1);
    l.back() = 2;
    CHECK(primitive_dimension(l, kTern) == primitive_basis(l, kTern).dimension());
  }
}

TEST_CASE("reduced criterion equals full primitivity") {
  PrimOptions full;
  full.full_criterion = true;
  for (ArityBound b : {kBin, kOmega})
    for (std::size_t n = 3; n <= 4; ++n) {
      Basis half = primitive_basis_multilinear(n, b);
      Basis all = primitive_basis_multilinear(n, b, full);
      CHECK(half.leading == all.leading);
      CHECK(half.vectors == all.vectors);
    }
  std::vector<Label> l{1, 1, 2, 2};
  CHECK(primitive_basis(l, kBin).vectors == primitive_basis(l, kBin, full).vectors);
}

TEST_CASE("coordinates in a primitive basis") {
  Basis b = primitive_basis_multilinear(3, kBin);
  Element v = b.vectors[0] - Rational(2, 3) * b.vectors[5];
  auto c = b.coordinates(v);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 1);
  CHECK((*c)[5] == Rational(-2, 3));
  CHECK_FALSE(b.coordinates(parse_element("1*((x1 x2) x3)", kBin)).has_value());
}

TEST_CASE("resource limit") {
  PrimOptions tiny;
  tiny.cell_cap = 100;
  CHECK_THROWS_AS(primitive_basis_multilinear(4, kBin, tiny), ResourceLimitError);
  CHECK_THROWS_AS(primitive_dimension_multilinear(4, kBin, tiny), ResourceLimitError);
  CHECK_NOTHROW(primitive_basis_multilinear(2, kBin, tiny));
}

TEST_CASE("PBW complement examples") {
  std::vector<Label> xx{1, 1};
  std::vector<Basis> lower = lower_primitive_bases(xx, kBin);
  REQUIRE(lower.size() == 1);
  std::vector<Element> comp = pbw_complement_basis(xx, kBin, lower);
  REQUIRE(comp.size() == 1);
  CHECK(comp[0] == parse_element("2*(x1 x1)", kBin));
  CHECK(check_pbw(iota_labels(3), kBin) == 4);
  CHECK(pbw_complement_basis(std::vector<Label>{1}, kBin, {}).empty());
  // inconsistent lower data
  std::vector<Basis> wrong{primitive_basis(std::vector<Label>{2}, kBin)};
  CHECK_THROWS_AS(pbw_complement_basis(xx, kBin, wrong), DomainError);
}

TEST_CASE("PBW on one variable and on multilinear components") {
  for (std::size_t n = 1; n <= 5; ++n) check_pbw(std::vector<Label>(n, 1), kBin);
  for (std::size_t n = 1; n <= 4; ++n) check_pbw(iota_labels(n), kBin);
  std::vector<Label> l{1, 1, 2};
  check_pbw(l, kOmega);
  std::vector<Label> l2{1, 1, 2, 2};
  check_pbw(l2, kTern);
}

TEST_CASE("characters of the primitive modules") {
  auto ch = character(3, kBin);
  CHECK(ch.at(Partition{1, 1, 1}) == 8);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto values = character(n, kBin);
    for (const Partition& l : partitions(static_cast<unsigned>(n))) {
      // trace = z_lambda * coefficient of p_lambda
      CHECK(values.at(l) == ch_prim(static_cast<unsigned>(n), kBin).coefficient(l) * Rational(z_lambda(l)));
    }
  }
  CHECK(to_schur(from_class_function(character(3, kOmega))) ==
        std::map<Partition, Rational>{{Partition{3}, 2}, {Partition{2, 1}, 5}, {Partition{1, 1, 1}, 2}});
  CHECK(cycle_type_representative(Partition{2, 1}) == std::vector<Label>{2, 1, 3});
  CHECK(cycle_type_representative(Partition{3}) == std::vector<Label>{2, 3, 1});
}

TEST_CASE("character of the omega module at degree four" * doctest::timeout(120)) {
  CHECK(to_schur(from_class_function(character(4, kOmega))) == to_schur(ch_prim(4, kOmega)));
}
