#include <doctest.h>

#include <array>

#include "magn/errors.hpp"
#include "magn/prim.hpp"
#include "magn/series.hpp"
#include "magn/symfun.hpp"

using namespace magn;

namespace {

const ArityBound kBin = ArityBound::finite(2);
const ArityBound kOmega = ArityBound::omega();

using Schur = std::map<Partition, Rational>;

SymFunc p(std::initializer_list<unsigned> parts, Rational c = 1) { return SymFunc::power_sum(Partition(parts), c); }

// Character table of Sigma_3.
int sigma3_character(const Partition& mu, const Partition& lambda) {
  static const std::map<std::pair<std::string, std::string>, int> table{
      {{"[3]", "[1,1,1]"}, 1},   {{"[3]", "[2,1]"}, 1},   {{"[3]", "[3]"}, 1},
      {{"[2,1]", "[1,1,1]"}, 2}, {{"[2,1]", "[2,1]"}, 0}, {{"[2,1]", "[3]"}, -1},
      {{"[1,1,1]", "[1,1,1]"}, 1}, {{"[1,1,1]", "[2,1]"}, -1}, {{"[1,1,1]", "[3]"}, 1},
  };
  return table.at({mu.to_string(), lambda.to_string()});
}

}  // namespace

TEST_CASE("partitions") {
  Partition l{1, 3, 1};
  CHECK(l.to_string() == "[3,1,1]");
  CHECK(l.weight() == 5);
  CHECK(l.length() == 3);
  CHECK(l.multiplicity(1) == 2);
  CHECK(l.multiplicity(2) == 0);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  std::vector<Partition> p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
  CHECK(std::is_sorted(p4.begin(), p4.end()));
  std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (unsigned n = 0; n < counts.size(); ++n) CHECK(partitions(n).size() == counts[n]);
  CHECK(Partition{2} < Partition{1, 1, 1});
}

TEST_CASE("mobius and centralizer orders") {
  std::vector<int> mu{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (unsigned d = 1; d <= mu.size(); ++d) CHECK(mobius(d) == mu[d - 1]);
  CHECK(mobius(30) == -1);
  CHECK(z_lambda(Partition{}) == 1);
  CHECK(z_lambda(Partition{2, 1, 1}) == 4);
  CHECK(z_lambda(Partition{1, 1, 1, 1}) == 24);
  CHECK(z_lambda(Partition{3, 3}) == 18);
  for (unsigned n = 1; n <= 7; ++n) {
    Rational sum = 0;
    for (const Partition& l : partitions(n)) sum += Rational(1) / Rational(z_lambda(l));
    CHECK(sum == 1);
  }
}

TEST_CASE("Murnaghan-Nakayama characters") {
  for (const Partition& mu : partitions(3))
    for (const Partition& l : partitions(3)) CHECK(mn_character(mu, l) == sigma3_character(mu, l));
  for (unsigned n = 1; n <= 6; ++n)
    for (const Partition& l : partitions(n)) {
      CHECK(mn_character(Partition({n}), l) == 1);
      // sign character: (-1)^(n - length)
      std::vector<unsigned> ones(n, 1);
      CHECK(mn_character(Partition(ones), l) == ((n - l.length()) % 2 ? -1 : 1));
    }
  CHECK(mn_character(Partition{2, 2}, Partition{2, 2}) == 2);
  CHECK(mn_character(Partition{3, 1}, Partition{2, 2}) == -1);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), DomainError);
}

TEST_CASE("character orthogonality") {
  for (unsigned n = 1; n <= 6; ++n) {
    std::vector<Partition> ps = partitions(n);
    for (const Partition& a : ps)
      for (const Partition& b : ps) {
        Rational s = 0;
        for (const Partition& l : ps) s += Rational(mn_character(a, l) * mn_character(b, l)) / Rational(z_lambda(l));
        CHECK(s == (a == b ? 1 : 0));
      }
    for (const Partition& a : ps) {
      std::vector<unsigned> ones(n, 1);
      CHECK(mn_character(a, Partition(ones)) == specht_dimension(a));
    }
  }
  CHECK(specht_dimension(Partition{3, 2}) == 5);
  CHECK(specht_dimension(Partition{3, 2, 1}) == 16);
}

TEST_CASE("symmetric function arithmetic") {
  SymFunc f = p({1}) + p({2}, 3);
  CHECK(f.coefficient(Partition{2}) == 3);
  CHECK((f - f).is_zero());
  CHECK(f * f == p({1, 1}) + p({2, 1}, 6) + p({2, 2}, 9));
  CHECK(multiply_truncated(f, f, 3) == p({1, 1}) + p({2, 1}, 6));
  CHECK(f.homogeneous_part(2) == p({2}, 3));
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.min_weight() == 1);
  CHECK(SymFunc().min_weight() == 0);
  CHECK(format_symfunc(f) == "1*p[1] + 3*p[2]");
  CHECK(format_symfunc(SymFunc()) == "0");
}

TEST_CASE("plethysm by power sums") {
  SymFunc f = p({2, 1}, Rational(1, 3)) + p({1});
  CHECK(plethysm_power(1, f) == f);
  CHECK(plethysm_power(2, p({1})) == p({2}));
  CHECK(plethysm_power(2, p({1, 1})) == p({2, 2}));
  CHECK(plethysm_power(3, f) == p({6, 3}, Rational(1, 3)) + p({3}));
  SymFunc g = p({2}) + p({1, 1}, 2);
  CHECK(plethysm_power(2, f * g) == plethysm_power(2, f) * plethysm_power(2, g));
}

TEST_CASE("plethystic logarithm") {
  CHECK(sf_log(SymFunc(), 4).is_zero());
  CHECK_THROWS_AS(sf_log(SymFunc::constant(1), 3), DomainError);
  SymFunc l = sf_log(ch_operad(kBin, 3), 3);
  CHECK(l.homogeneous_part(3) == Rational(1, 3) * (p({1, 1, 1}, 4) - p({3})));
  CHECK(l.homogeneous_part(1) == p({1}));
  CHECK(l.homogeneous_part(2) == Rational(1, 2) * (p({1, 1}) - p({2})));
  // Log(sum_n h_n) = p1 with h_n = sum_lambda p_lambda / z_lambda
  SymFunc h;
  for (unsigned n = 1; n <= 6; ++n)
    for (const Partition& lam : partitions(n)) h.add_term(lam, Rational(1) / Rational(z_lambda(lam)));
  CHECK(sf_log(h, 6) == p({1}));
  for (ArityBound b : {kBin, ArityBound::finite(3), kOmega}) {
    SymFunc lg = sf_log(ch_operad(b, 6), 6);
    for (unsigned n = 1; n <= 6; ++n) CHECK(lg.homogeneous_part(n) == ch_prim(n, b));
    Series r = rank_morphism(lg, 6);
    CHECK(r == prim_generating_series(b, 6));
  }
}

TEST_CASE("ch_prim examples") {
  CHECK(ch_prim(1, kBin) == p({1}));
  CHECK(ch_prim(2, kBin) == Rational(1, 2) * (p({1, 1}) - p({2})));
  CHECK(ch_prim(3, kBin) == Rational(1, 3) * (p({1, 1, 1}, 4) - p({3})));
  CHECK(to_schur(ch_prim(2, kBin)) == Schur{{Partition{1, 1}, 1}});
  CHECK(rank_morphism(ch_operad(kBin, 5), 5) == operad_generating_series(kBin, 5));
}

TEST_CASE("Schur tables") {
  CHECK(to_schur(ch_prim(3, kBin)) == Schur{{Partition{3}, 1}, {Partition{2, 1}, 3}, {Partition{1, 1, 1}, 1}});
  CHECK(to_schur(ch_prim(3, kOmega)) == Schur{{Partition{3}, 2}, {Partition{2, 1}, 5}, {Partition{1, 1, 1}, 2}});
  CHECK(to_schur(ch_prim(4, kBin)) == Schur{{Partition{4}, 3},
                                            {Partition{3, 1}, 10},
                                            {Partition{2, 2}, 6},
                                            {Partition{2, 1, 1}, 10},
                                            {Partition{1, 1, 1, 1}, 3}});
  CHECK(to_schur(ch_prim(4, kOmega)) == Schur{{Partition{4}, 8},
                                              {Partition{3, 1}, 25},
                                              {Partition{2, 2}, 16},
                                              {Partition{2, 1, 1}, 25},
                                              {Partition{1, 1, 1, 1}, 8}});
  CHECK(format_schur(to_schur(ch_prim(3, kBin))) == "1*s[3] + 3*s[2,1] + 1*s[1,1,1]");
  CHECK_THROWS_AS(to_schur(p({1}) + p({2})), DomainError);
}

TEST_CASE("Schur multiplicities are module dimensions") {
  for (ArityBound b : {kBin, ArityBound::finite(3), kOmega})
    for (unsigned n = 1; n <= 6; ++n) {
      Schur s = to_schur(ch_prim(n, b));
      Integer total = 0;
      for (auto& [mu, c] : s) {
        CHECK(is_integral(c));
        CHECK(c >= 0);
        total += c.get_num() * specht_dimension(mu);
      }
      CHECK(total == prim_dim_formula(n, b));
    }
}

TEST_CASE("class functions round trip through the Frobenius map") {
  for (ArityBound b : {kBin, kOmega})
    for (unsigned n = 1; n <= 5; ++n) {
      SymFunc f = ch_prim(n, b);
      std::map<Partition, Rational> values;
      for (const Partition& l : partitions(n)) values[l] = f.coefficient(l) * Rational(z_lambda(l));
      CHECK(from_class_function(values) == f);
    }
}

TEST_CASE("kernel characters agree with the formula") {
  for (unsigned n = 1; n <= 4; ++n) CHECK(from_class_function(character(n, kBin)) == ch_prim(n, kBin));
  CHECK(from_class_function(character(3, kOmega)) == ch_prim(3, kOmega));
}

TEST_CASE("Witt multigraded formula") {
  std::array<unsigned, 1> r1{1};
  std::array<unsigned, 2> r11{1, 1};
  auto witt1 = [&](unsigned n) {
    std::array<unsigned, 1> d{n};
    return witt_multigraded(d, r1);
  };
  CHECK(witt1(1) == 1);
  CHECK(witt1(2) == 0);
  CHECK(witt1(3) == 1);
  CHECK(witt1(4) == 3);
  std::array<unsigned, 2> d11{1, 1};
  CHECK(witt_multigraded(d11, r11) == 1);
  std::array<unsigned, 2> d21{2, 1};
  CHECK(witt_multigraded(d21, r11) == 4);
  std::array<unsigned, 1> zero{0};
  CHECK_THROWS_AS(witt_multigraded(zero, r1), DomainError);

  // against the kernel on the corresponding label multisets
  auto kernel = [](std::vector<Label> labels) {
    return Integer(static_cast<unsigned long>(primitive_dimension(labels, kBin)));
  };
  CHECK(witt1(2) == kernel({1, 1}));
  CHECK(witt1(3) == kernel({1, 1, 1}));
  CHECK(witt1(4) == kernel({1, 1, 1, 1}));
  CHECK(witt1(5) == kernel({1, 1, 1, 1, 1}));
  CHECK(witt_multigraded(d21, r11) == kernel({1, 1, 2}));
  std::array<unsigned, 2> d22{2, 2};
  CHECK(witt_multigraded(d22, r11) == kernel({1, 1, 2, 2}));
  std::array<unsigned, 3> d111{1, 1, 1};
  std::array<unsigned, 3> r111{1, 1, 1};
  CHECK(witt_multigraded(d111, r111) == kernel({1, 2, 3}));
  std::array<unsigned, 4> d1111{1, 1, 1, 1};
  std::array<unsigned, 4> r1111{1, 1, 1, 1};
  CHECK(witt_multigraded(d1111, r1111) == prim_dim_formula(4, kBin));
  // two generators of degree one: all components of total degree 3 in x, y
  std::array<unsigned, 1> r2{2};
  std::array<unsigned, 1> d3{3};
  CHECK(witt_multigraded(d3, r2) == 2 * kernel({1, 1, 1}) + 2 * kernel({1, 1, 2}));
}
