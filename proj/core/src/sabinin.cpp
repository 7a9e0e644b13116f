#include "magn/sabinin.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "magn/errors.hpp"
#include "magn/hopf.hpp"

namespace magn {

Element product(const Element& a, const Element& b) {
  std::array<Element, 2> args{a, b};
  return apply_generator(2, args);
}

Element left_normed_product(std::span<const Element> word) {
  if (word.empty()) throw DomainError("left-normed product of an empty word");
  Element out = word.front();
  for (std::size_t i = 1; i < word.size(); ++i) out = product(out, word[i]);
  return out;
}

Element commutator(const Element& x, const Element& y) { return product(x, y) - product(y, x); }

Element associator(const Element& x, const Element& y, const Element& z) {
  return product(product(x, y), z) - product(x, product(y, z));
}

Element angle(const Element& x, const Element& y, const Element& z) { return associator(x, z, y) - associator(x, y, z); }

Element brace3(const Element& x, const Element& y, const Element& z) { return associator(x, z, y) + associator(x, y, z); }

Element assoc_dev(const Element& x, const Element& y, const Element& z) {
  if (!x.bound().admits(3)) throw BoundError("(x,y,z)_t needs a ternary operation");
  std::array<Element, 3> args{x, y, z};
  return product(product(x, y), z) - apply_generator(3, args);
}

Element op_p(const Element& x, const Element& t, const Element& y, const Element& z) {
  return associator(product(x, t), y, z) - product(x, associator(t, y, z)) - product(t, associator(x, y, z));
}

Element op_q(const Element& x, const Element& t, const Element& y, const Element& z) {
  return associator(x, product(t, y), z) - product(y, associator(x, t, z)) - product(t, associator(x, y, z));
}

namespace {

void split(std::span<const Element> word, unsigned mask, std::vector<Element>& first, std::vector<Element>& second) {
  first.clear();
  second.clear();
  for (std::size_t i = 0; i < word.size(); ++i) (mask >> i & 1u ? first : second).push_back(word[i]);
}

}  // namespace

Element su_P(std::span<const Element> xs, std::span<const Element> ys, const Element& z) {
  if (xs.empty() || ys.empty()) throw DomainError("P needs nonempty x and y words");
  if (xs.size() + ys.size() > 16) throw DomainError("P words are too long");
  Element out = associator(left_normed_product(xs), left_normed_product(ys), z);
  std::vector<Element> x1, x2, y1, y2;
  for (unsigned mx = 0; mx < (1u << xs.size()); ++mx) {
    split(xs, mx, x1, x2);
    if (x2.empty()) continue;
    for (unsigned my = 0; my < (1u << ys.size()); ++my) {
      split(ys, my, y1, y2);
      if (y2.empty() || (x1.empty() && y1.empty())) continue;
      std::vector<Element> word = x1;
      word.insert(word.end(), y1.begin(), y1.end());
      word.push_back(su_P(x2, y2, z));
      out -= left_normed_product(word);
    }
  }
  return out;
}

Element angle_word(std::span<const Element> xs, const Element& y, const Element& z) {
  if (xs.empty()) return -commutator(y, z);
  std::array<const Element, 1> zw{z};
  std::array<const Element, 1> yw{y};
  return su_P(xs, zw, y) - su_P(xs, yw, z);
}

Element brace_word(std::span<const Element> xs, std::span<const Element> ys) {
  if (xs.empty() || ys.size() < 2) throw DomainError("brace word needs m >= 1 and n >= 2");
  std::vector<std::size_t> tau(xs.size());
  std::vector<std::size_t> delta(ys.size());
  std::iota(tau.begin(), tau.end(), 0);
  Element out(xs.front().bound());
  std::vector<Element> xw(xs.size());
  std::vector<Element> yw(ys.size() - 1);
  do {
    for (std::size_t i = 0; i < tau.size(); ++i) xw[i] = xs[tau[i]];
    std::iota(delta.begin(), delta.end(), 0);
    do {
      for (std::size_t i = 0; i + 1 < delta.size(); ++i) yw[i] = ys[delta[i]];
      out += su_P(xw, yw, ys[delta.back()]);
    } while (std::next_permutation(delta.begin(), delta.end()));
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

Element phi(std::span<const Element> xs, std::span<const Element> ys) {
  Element out = brace_word(xs, ys);
  out *= Rational(1) / Rational(factorial(static_cast<unsigned>(xs.size())) * factorial(static_cast<unsigned>(ys.size())));
  return out;
}

bool DescriptionReport::ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.ok; });
}

namespace {

using Gens = std::vector<Element>;

Gens generators(std::size_t n, ArityBound bound) {
  Gens g;
  for (std::size_t i = 1; i <= n; ++i) g.push_back(Element::generator(static_cast<Label>(i), bound));
  return g;
}

// f evaluated on every ordering of the generators.
std::vector<Element> relabelings(const Gens& gens, const std::function<Element(const Gens&)>& f) {
  std::vector<std::size_t> perm(gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> out;
  Gens args(gens.size());
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) args[i] = gens[perm[i]];
    out.push_back(f(args));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Shapes of binary trees evaluated with commutators.
Element bracket(const Tree& shape, const Gens& args, std::size_t& next) {
  if (shape.is_leaf()) return args[next++];
  Element l = bracket(shape.children()[0], args, next);
  Element r = bracket(shape.children()[1], args, next);
  return commutator(l, r);
}

std::vector<Element> iterated_commutators(const Gens& gens) {
  std::vector<Element> out;
  for (const Tree& shape : enumerate_shapes(gens.size(), ArityBound::finite(2))) {
    auto more = relabelings(gens, [&](const Gens& a) {
      std::size_t next = 0;
      return bracket(shape, a, next);
    });
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::size_t count_nonprimitive(std::span<const Element> elements) {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(), [](const Element& e) { return !is_primitive(e); }));
}

void append(std::vector<Element>& to, const std::vector<Element>& from) { to.insert(to.end(), from.begin(), from.end()); }

Claim equality_claim(std::string name, std::size_t got, std::size_t expected) {
  return Claim{std::move(name), got == expected, std::to_string(got) + " (expected " + std::to_string(expected) + ")"};
}

Claim zero_claim(std::string name, const Element& e) {
  return Claim{std::move(name), e.is_zero(), e.is_zero() ? "0" : std::to_string(e.size()) + " nonzero terms"};
}

}  // namespace

DescriptionReport verify_degree4_description(const PrimOptions& opts) {
  DescriptionReport report;
  const ArityBound bin = ArityBound::finite(2);

  // degree 3
  Gens g3 = generators(3, bin);
  const Element &a = g3[0], &b = g3[1], &c = g3[2];
  report.claims.push_back(zero_claim("<x,z,y> = -<x,y,z>", angle(a, c, b) + angle(a, b, c)));
  report.claims.push_back(zero_claim("{x,z,y} = {x,y,z}", brace3(a, c, b) - brace3(a, b, c)));
  Element akivis = angle(a, b, c) + angle(b, c, a) + angle(c, a, b) + commutator(commutator(a, b), c) +
                   commutator(commutator(b, c), a) + commutator(commutator(c, a), b);
  report.claims.push_back(zero_claim("Akivis relation", akivis));

  std::vector<Element> span3;
  append(span3, relabelings(g3, [](const Gens& x) { return angle(x[0], x[1], x[2]); }));
  append(span3, relabelings(g3, [](const Gens& x) { return brace3(x[0], x[1], x[2]); }));
  append(span3, iterated_commutators(g3));
  std::size_t prim3 = primitive_dimension_multilinear(3, bin, opts);
  report.claims.push_back(equality_claim("degree 3 operations are primitive (non-primitive count)", count_nonprimitive(span3), 0));
  report.claims.push_back(equality_claim("degree 3 span rank, N=2", rank(span3), prim3));

  Gens g3w = generators(3, ArityBound::omega());
  std::vector<Element> span3w;
  for (const Element& e : span3) span3w.push_back(promote(e, ArityBound::omega()));
  append(span3w, relabelings(g3w, [](const Gens& x) { return assoc_dev(x[0], x[1], x[2]); }));
  std::size_t prim3w = primitive_dimension_multilinear(3, ArityBound::omega(), opts);
  report.claims.push_back(equality_claim("degree 3 span rank, N=omega", rank(span3w), prim3w));

  // degree 4
  Gens g4 = generators(4, bin);
  report.prim_dimension = primitive_dimension_multilinear(4, bin, opts);

  std::vector<Element> base;
  append(base, iterated_commutators(g4));
  append(base, relabelings(g4, [](const Gens& x) { return commutator(angle(x[0], x[1], x[2]), x[3]); }));
  append(base, relabelings(g4, [](const Gens& x) { return commutator(brace3(x[0], x[1], x[2]), x[3]); }));
  append(base, relabelings(g4, [](const Gens& x) { return angle(commutator(x[0], x[1]), x[2], x[3]); }));
  append(base, relabelings(g4, [](const Gens& x) { return angle(x[0], commutator(x[1], x[2]), x[3]); }));
  append(base, relabelings(g4, [](const Gens& x) { return brace3(commutator(x[0], x[1]), x[2], x[3]); }));
  append(base, relabelings(g4, [](const Gens& x) { return brace3(x[0], commutator(x[1], x[2]), x[3]); }));
  report.rank_commutator_span = rank(base);
  report.claims.push_back(equality_claim("commutator span rank", report.rank_commutator_span, 65));

  const Element &x = g4[0], &t = g4[1], &y = g4[2], &z = g4[3];
  auto aw = [](const Element& p, const Element& q, const Element& r, const Element& s) {
    std::array<const Element, 2> w{p, q};
    return angle_word(w, r, s);
  };
  std::vector<Element> extra{aw(x, t, y, z), aw(y, z, x, t), aw(z, t, y, x)};
  std::vector<Element> with_angles = base;
  append(with_angles, extra);
  report.rank_with_angle_words = rank(with_angles);
  report.claims.push_back(equality_claim("rank with three angle words", report.rank_with_angle_words, 68));

  // {ab | cd}: 6 ordered splittings into pairs; {a | bcd}: 4 choices of a
  std::vector<Element> braces;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::vector<Element> left{g4[i], g4[j]};
      std::vector<Element> right;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != i && k != j) right.push_back(g4[k]);
      braces.push_back(brace_word(left, right));
    }
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Element> left{g4[i]};
    std::vector<Element> right;
    for (std::size_t k = 0; k < 4; ++k)
      if (k != i) right.push_back(g4[k]);
    braces.push_back(brace_word(left, right));
  }
  std::vector<Element> all = with_angles;
  append(all, braces);
  report.rank_total = rank(all);
  report.claims.push_back(equality_claim("rank with brace words", report.rank_total, 78));
  report.claims.push_back(equality_claim("dimension of the primitive component", report.prim_dimension, 78));
  report.claims.push_back(equality_claim("degree 4 operations are primitive (non-primitive count)", count_nonprimitive(all), 0));

  Element lhs(bin);
  Element rhs(bin);
  std::array<std::size_t, 3> cyc{1, 2, 3};
  for (int r = 0; r < 3; ++r) {
    const Element& ca = g4[cyc[r % 3]];
    const Element& cb = g4[cyc[(r + 1) % 3]];
    const Element& cc = g4[cyc[(r + 2) % 3]];
    lhs += aw(x, cc, ca, cb);
    rhs += angle(x, commutator(ca, cb), cc) + commutator(angle(x, ca, cb), cc);
  }
  report.claims.push_back(zero_claim("degree 4 Sabinin relation", lhs - rhs));
  return report;
}

}  // namespace magn
