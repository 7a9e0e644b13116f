#include "magn/hopf.hpp"

#include <bit>
#include <ostream>
#include <tuple>

#include "magn/errors.hpp"

namespace magn {

bool TensorTermOrder::operator()(const TreePair& a, const TreePair& b) const {
  if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
  if (auto c = a.first <=> b.first; c != 0) return c < 0;
  return a.second < b.second;
}

Rational TensorElement::coefficient(const Tree& left, const Tree& right) const {
  auto it = terms_.find(TreePair(left, right));
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Tree& left, const Tree& right, const Rational& coeff) {
  if (coeff == 0) return;
  if (!admits(bound_, left) || !admits(bound_, right))
    throw BoundError("tensor component exceeds arity bound " + bound_.to_string());
  auto [it, inserted] = terms_.try_emplace(TreePair(left, right), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement TensorElement::slice(std::size_t left_degree, std::size_t right_degree) const {
  TensorElement out(bound_);
  for (const auto& [key, c] : terms_)
    if (key.first.degree() == left_degree && key.second.degree() == right_degree)
      out.terms_.emplace(key, c);
  return out;
}

TensorElement TensorElement::swapped() const {
  TensorElement out(bound_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(TreePair(key.second, key.first), c);
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  require_same_bound(bound_, other.bound_);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  require_same_bound(bound_, other.bound_);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

TensorElement tensor(const Element& a, const Element& b) {
  require_same_bound(a.bound(), b.bound());
  TensorElement out(a.bound());
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) out.add_term(ta, tb, ca * cb);
  return out;
}

TensorElement coproduct(const Tree& t, ArityBound bound) {
  TensorElement out(bound);
  std::size_t n = t.degree();
  if (n > kMaxMaskDegree) throw DomainError("coproduct supports at most 63 leaves");
  LeafMask full = full_mask(n);
  for (LeafMask mask = 0;; ++mask) {
    out.add_term(restrict_reduce(t, mask), restrict_reduce(t, full & ~mask), 1);
    if (mask == full) break;
  }
  return out;
}

TensorElement coproduct(const Element& e) {
  TensorElement out(e.bound());
  for (const auto& [t, c] : e.terms()) {
    TensorElement part = coproduct(t, e.bound());
    part *= c;
    out += part;
  }
  return out;
}

TensorElement reduced_coproduct(const Element& e) {
  if (e.constant_term() != 0) throw DomainError("reduced coproduct needs a zero constant term");
  TensorElement out = coproduct(e);
  Element one = Element::unit(e.bound());
  out -= tensor(e, one);
  out -= tensor(one, e);
  return out;
}

bool is_primitive(const Element& e) { return e.constant_term() == 0 && reduced_coproduct(e).is_zero(); }

Element partial(const Tree& s, const Element& f) {
  if (s.is_empty()) return f;
  Element out(f.bound());
  for (const auto& [t, c] : f.terms()) {
    if (t.degree() < s.degree()) continue;
    std::size_t n = t.degree();
    LeafMask full = full_mask(n);
    for (LeafMask mask = 0;; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == s.degree() && restrict_reduce(t, mask) == s)
        out.add_term(restrict_reduce(t, full & ~mask), c);
      if (mask == full) break;
    }
  }
  return out;
}

namespace {

// Next integer with the same number of set bits.
LeafMask next_same_popcount(LeafMask v) {
  LeafMask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

Element shuffle(const Tree& t1, const Tree& t2, ArityBound bound) {
  Element out(bound);
  if (t1.is_empty()) {
    out.add_term(t2, 1);
    return out;
  }
  if (t2.is_empty()) {
    out.add_term(t1, 1);
    return out;
  }
  std::size_t n1 = t1.degree();
  std::size_t n = n1 + t2.degree();
  if (n > kMaxMaskDegree) throw DomainError("shuffle supports at most 63 leaves");
  // A pair (T, I) with red(T|I) = t1 and red(T|I^c) = t2 is the same as a
  // shape S with red(S|I), red(S|I^c) the shapes of t1, t2; the labels of T
  // are then forced.
  Tree shape1 = shape_of(t1);
  Tree shape2 = shape_of(t2);
  std::vector<Label> labels1 = leaf_labels(t1);
  std::vector<Label> labels2 = leaf_labels(t2);
  LeafMask full = full_mask(n);
  std::vector<Label> labels(n);
  for (const Tree& s : enumerate_shapes(n, bound)) {
    for (LeafMask mask = full_mask(n1); mask <= full; mask = next_same_popcount(mask)) {
      if (restrict_reduce(s, mask) == shape1 && restrict_reduce(s, full & ~mask) == shape2) {
        std::size_t i1 = 0;
        std::size_t i2 = 0;
        for (std::size_t i = 0; i < n; ++i) labels[i] = ((mask >> i) & 1U) ? labels1[i1++] : labels2[i2++];
        out.add_term(relabel_leaves(s, labels), 1);
      }
      if (mask == (full & ~full_mask(n - n1))) break;  // highest mask with n1 bits
    }
  }
  return out;
}

Element shuffle(const Element& f, const Element& g) {
  require_same_bound(f.bound(), g.bound());
  Element out(f.bound());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Element part = shuffle(a, b, f.bound());
      part *= ca * cb;
      out += part;
    }
  }
  return out;
}

TensorElement shuffle(const TensorElement& f, const TensorElement& g) {
  require_same_bound(f.bound(), g.bound());
  ArityBound bound = f.bound();
  TensorElement out(bound);
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Element left = shuffle(a.first, b.first, bound);
      Element right = shuffle(a.second, b.second, bound);
      for (const auto& [l, cl] : left.terms())
        for (const auto& [r, cr] : right.terms()) out.add_term(l, r, ca * cb * cl * cr);
    }
  }
  return out;
}

Rational pairing(const Element& f, const Element& g) {
  const Element& small = f.size() <= g.size() ? f : g;
  const Element& large = f.size() <= g.size() ? g : f;
  Rational r = 0;
  for (const auto& [t, c] : small.terms()) {
    auto it = large.terms().find(t);
    if (it != large.terms().end()) r += c * it->second;
  }
  return r;
}

Rational pairing(const TensorElement& f, const TensorElement& g) {
  Rational r = 0;
  for (const auto& [key, c] : f.terms()) {
    auto it = g.terms().find(key);
    if (it != g.terms().end()) r += c * it->second;
  }
  return r;
}

TensorElement nabla2(const Element& f) {
  TensorElement out(f.bound());
  Tree one;
  for (const auto& [t, c] : f.terms()) {
    if (t.is_empty()) {
      out.add_term(one, one, c);
      continue;
    }
    out.add_term(t, one, c);
    out.add_term(one, t, c);
    if (t.arity() == 2) out.add_term(t.children()[0], t.children()[1], c);
  }
  return out;
}

TensorElement apply_generator(std::size_t k, std::span<const TensorElement> args) {
  if (k < 2) throw DomainError("generator arity must be >= 2");
  if (args.size() != k) throw DomainError("generator arity does not match argument count");
  ArityBound bound = args.front().bound();
  if (!bound.admits(k)) throw BoundError("generator of arity " + std::to_string(k) + " not in Mag_" + bound.to_string());
  for (const TensorElement& a : args) require_same_bound(bound, a.bound());
  TensorElement out(bound);
  for (const TensorElement& a : args)
    if (a.is_zero()) return out;
  std::vector<TensorElement::Terms::const_iterator> pick;
  for (const TensorElement& a : args) pick.push_back(a.terms().begin());
  std::vector<Tree> lefts(k);
  std::vector<Tree> rights(k);
  while (true) {
    Rational coeff = 1;
    for (std::size_t i = 0; i < k; ++i) {
      lefts[i] = pick[i]->first.first;
      rights[i] = pick[i]->first.second;
      coeff *= pick[i]->second;
    }
    out.add_term(apply_generator_monomials(lefts), apply_generator_monomials(rights), coeff);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pick[i] != args[i].terms().end()) break;
      pick[i] = args[i].terms().begin();
      if (i == 0) return out;
    }
  }
}

namespace {

using Triple = std::tuple<Tree, Tree, Tree>;
using TripleTensor = std::map<Triple, Rational>;

void add_triple(TripleTensor& out, Triple key, const Rational& c) {
  auto [it, inserted] = out.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

TripleTensor coassoc_left(const Tree& t, ArityBound bound) {
  TripleTensor out;
  TensorElement d = coproduct(t, bound);
  for (const auto& [ab, c] : d.terms()) {
    TensorElement inner = coproduct(ab.first, bound);
    for (const auto& [a12, c1] : inner.terms()) add_triple(out, Triple(a12.first, a12.second, ab.second), c * c1);
  }
  return out;
}

TripleTensor coassoc_right(const Tree& t, ArityBound bound) {
  TripleTensor out;
  TensorElement d = coproduct(t, bound);
  for (const auto& [ab, c] : d.terms()) {
    TensorElement inner = coproduct(ab.second, bound);
    for (const auto& [b12, c2] : inner.terms()) add_triple(out, Triple(ab.first, b12.first, b12.second), c * c2);
  }
  return out;
}

bool check_morphism(const Tree& t, ArityBound bound, std::string& failure) {
  if (!t.is_node()) return true;
  std::vector<TensorElement> parts;
  for (const Tree& c : t.children()) parts.push_back(coproduct(c, bound));
  TensorElement lhs = coproduct(t, bound);
  if (!(lhs == apply_generator(t.arity(), parts))) {
    failure = "morphism property fails on " + format_tree(t);
    return false;
  }
  // vee^{k+1} with a unit argument reduces to vee^k on both tensor factors.
  std::size_t k = t.arity();
  if (bound.admits(k + 1)) {
    TensorElement unit(bound);
    unit.add_term(Tree::empty(), Tree::empty(), 1);
    for (std::size_t at = 0; at <= k; ++at) {
      std::vector<TensorElement> with_unit = parts;
      with_unit.insert(with_unit.begin() + static_cast<std::ptrdiff_t>(at), unit);
      if (!(lhs == apply_generator(k + 1, with_unit))) {
        failure = "unit action fails on " + format_tree(t) + " with 1 at slot " + std::to_string(at + 1);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

HopfReport verify_hopf_axioms(ArityBound bound, std::size_t num_vars, std::size_t max_degree) {
  HopfReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failure = std::move(why);
    return report;
  };
  {
    TensorElement d1 = coproduct(Tree::empty(), bound);
    if (d1.size() != 1 || d1.coefficient(Tree::empty(), Tree::empty()) != 1) return fail("Delta(1) != 1#1");
  }
  for (std::size_t n = 1; n <= max_degree; ++n) {
    for (const Tree& t : homogeneous_basis(n, num_vars, bound)) {
      ++report.monomials_checked;
      TensorElement d = coproduct(t, bound);
      if (!(d.swapped() == d)) return fail("cocommutativity fails on " + format_tree(t));
      if (coassoc_left(t, bound) != coassoc_right(t, bound)) return fail("coassociativity fails on " + format_tree(t));
      std::string why;
      if (!check_morphism(t, bound, why)) return fail(why);
      TensorElement reduced = reduced_coproduct(Element::monomial(t, bound));
      for (const auto& [key, c] : reduced.terms()) {
        std::size_t l = key.first.degree();
        std::size_t r = key.second.degree();
        if (l == 0 || r == 0 || l + r != n) return fail("filtration fails on " + format_tree(t));
      }
    }
  }
  return report;
}

std::string format_tensor(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    if (first) {
      out += to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(Rational(abs(c)));
    }
    first = false;
    out += '*';
    out += format_tree(key.first);
    out += '#';
    out += format_tree(key.second);
  }
  return out;
}

TensorElement parse_tensor(std::string_view text, ArityBound bound) {
  TensorElement out(bound);
  if (text == "0") return out;
  std::size_t pos = 0;
  Rational sign = 1;
  while (true) {
    std::size_t star = text.find('*', pos);
    if (star == std::string_view::npos) throw ParseError("expected '<rational>*<tree>#<tree>'", pos);
    Rational c;
    try {
      c = parse_rational(text.substr(pos, star - pos));
    } catch (const ParseError& e) {
      throw ParseError("invalid coefficient", pos + e.position());
    }
    pos = star + 1;
    std::size_t left_pos = pos;
    Tree left = parse_tree_prefix(text, pos);
    if (pos >= text.size() || text[pos] != '#') throw ParseError("expected '#'", pos);
    ++pos;
    std::size_t right_pos = pos;
    Tree right = parse_tree_prefix(text, pos);
    if (!admits(bound, left)) throw ParseError("tree exceeds arity bound", left_pos);
    if (!admits(bound, right)) throw ParseError("tree exceeds arity bound", right_pos);
    out.add_term(left, right, sign * c);
    if (pos == text.size()) break;
    std::string_view sep = text.substr(pos, 3);
    if (sep == " + ") {
      sign = 1;
    } else if (sep == " - ") {
      sign = -1;
    } else {
      throw ParseError("expected ' + ' or ' - '", pos);
    }
    pos += 3;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TensorElement& t) { return os << format_tensor(t); }

}  // namespace magn
