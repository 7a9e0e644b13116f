#include "magn/element.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "magn/errors.hpp"

namespace magn {

Element Element::monomial(const Tree& t, ArityBound bound, const Rational& coeff) {
  Element e(bound);
  e.add_term(t, coeff);
  return e;
}

Rational Element::coefficient(const Tree& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t d = terms_.begin()->first.degree();
  for (const auto& [t, c] : terms_)
    if (t.degree() != d) return std::nullopt;
  return d;
}

void Element::add_term(const Tree& t, const Rational& coeff) {
  if (coeff == 0) return;
  if (!admits(bound_, t))
    throw BoundError("tree " + format_tree(t) + " exceeds arity bound " + bound_.to_string());
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  require_same_bound(bound_, other.bound_);
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_bound(bound_, other.bound_);
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

Element& Element::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

void require_same_bound(ArityBound a, ArityBound b) {
  if (!(a == b))
    throw BoundError("mixed arity bounds " + a.to_string() + " and " + b.to_string() +
                     " (use promote for an explicit conversion)");
}

Element combine(std::span<const std::pair<Rational, Element>> parts) {
  if (parts.empty()) return Element();
  Element out(parts.front().second.bound());
  for (const auto& [c, e] : parts) {
    require_same_bound(out.bound(), e.bound());
    for (const auto& [t, a] : e.terms()) out.add_term(t, c * a);
  }
  return out;
}

Element promote(const Element& e, ArityBound target) {
  if (!target.is_omega() && (e.bound().is_omega() || e.bound().value() > target.value()))
    throw BoundError("cannot promote from " + e.bound().to_string() + " to smaller bound " + target.to_string());
  Element out(target);
  for (const auto& [t, c] : e.terms()) out.add_term(t, c);
  return out;
}

Tree apply_generator_monomials(std::span<const Tree> args) {
  std::vector<Tree> kept;
  kept.reserve(args.size());
  for (const Tree& t : args)
    if (!t.is_empty()) kept.push_back(t);
  if (kept.empty()) return Tree::empty();
  if (kept.size() == 1) return std::move(kept.front());
  return Tree::node(std::move(kept));
}

Element apply_generator(std::size_t k, std::span<const Element> args) {
  if (k < 2) throw DomainError("generator arity must be >= 2");
  if (args.size() != k) throw DomainError("generator of arity " + std::to_string(k) + " got " +
                                          std::to_string(args.size()) + " arguments");
  ArityBound bound = args.front().bound();
  if (!bound.admits(k)) throw BoundError("generator of arity " + std::to_string(k) + " not in Mag_" + bound.to_string());
  for (const Element& a : args) require_same_bound(bound, a.bound());

  Element out(bound);
  for (const Element& a : args)
    if (a.is_zero()) return out;

  // odometer over one term from each argument
  std::vector<Element::Terms::const_iterator> pick;
  for (const Element& a : args) pick.push_back(a.terms().begin());
  std::vector<Tree> trees(k);
  while (true) {
    Rational coeff = 1;
    for (std::size_t i = 0; i < k; ++i) {
      trees[i] = pick[i]->first;
      coeff *= pick[i]->second;
    }
    out.add_term(apply_generator_monomials(trees), coeff);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pick[i] != args[i].terms().end()) break;
      pick[i] = args[i].terms().begin();
      if (i == 0) return out;
    }
  }
}

std::vector<Tree> component_basis(std::span<const Label> labels, ArityBound bound) {
  if (labels.empty()) return {Tree::empty()};
  std::vector<Label> perm(labels.begin(), labels.end());
  std::sort(perm.begin(), perm.end());
  std::vector<Tree> shapes = enumerate_shapes(perm.size(), bound);
  std::vector<Tree> out;
  do {
    for (const Tree& s : shapes) out.push_back(relabel_leaves(s, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tree> multilinear_basis(std::size_t n, ArityBound bound) {
  if (n == 0) throw DomainError("multilinear basis needs n >= 1");
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{1});
  return component_basis(labels, bound);
}

std::vector<Tree> homogeneous_basis(std::size_t n, std::size_t num_vars, ArityBound bound) {
  if (n == 0) return {Tree::empty()};
  if (num_vars == 0) return {};
  std::vector<Tree> shapes = enumerate_shapes(n, bound);
  std::vector<Tree> out;
  std::vector<Label> word(n, 1);
  while (true) {
    for (const Tree& s : shapes) out.push_back(relabel_leaves(s, word));
    std::size_t i = n;
    while (i > 0 && word[i - 1] == num_vars) word[--i] = 1;
    if (i == 0) break;
    ++word[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_multilinear(const Element& e, std::size_t n) {
  for (const auto& [t, c] : e.terms()) {
    if (t.degree() != n) return false;
    std::vector<Label> labels = leaf_labels(t);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] != i + 1) return false;
  }
  return true;
}

namespace {

Element expand(const Tree& t, std::span<const Element> args, ArityBound bound) {
  if (t.is_leaf()) return args[t.label() - 1];
  std::vector<Element> parts;
  parts.reserve(t.arity());
  for (const Tree& c : t.children()) parts.push_back(expand(c, args, bound));
  return apply_generator(t.arity(), parts);
}

}  // namespace

Element substitute(const Element& operation, std::span<const Element> args) {
  std::size_t n = args.size();
  if (n == 0) throw DomainError("substitute needs at least one argument");
  if (!is_multilinear(operation, n))
    throw DomainError("operation is not multilinear in x1..x" + std::to_string(n));
  ArityBound bound = args.front().bound();
  for (const Element& a : args) require_same_bound(bound, a.bound());
  require_same_bound(bound, operation.bound());
  Element out(bound);
  for (const auto& [t, c] : operation.terms()) {
    Element part = expand(t, args, bound);
    part *= c;
    out += part;
  }
  return out;
}

Element relabel(const Element& e, std::span<const Label> perm) {
  std::vector<Element> gens;
  gens.reserve(perm.size());
  for (Label k : perm) gens.push_back(Element::generator(k, e.bound()));
  return substitute(e, gens);
}

std::string format_element(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.terms()) {
    if (first) {
      out += to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(Rational(abs(c)));
    }
    first = false;
    out += '*';
    out += format_tree(t);
  }
  return out;
}

namespace {

Rational parse_coefficient(std::string_view text, std::size_t& pos) {
  std::size_t star = text.find('*', pos);
  if (star == std::string_view::npos) throw ParseError("expected '<rational>*<tree>'", pos);
  Rational r;
  try {
    r = parse_rational(text.substr(pos, star - pos));
  } catch (const ParseError& e) {
    throw ParseError("invalid coefficient", pos + e.position());
  }
  pos = star + 1;
  return r;
}

}  // namespace

Element parse_element(std::string_view text, ArityBound bound) {
  Element out(bound);
  if (text == "0") return out;
  std::size_t pos = 0;
  Rational sign = 1;
  while (true) {
    Rational c = parse_coefficient(text, pos);
    std::size_t tree_pos = pos;
    Tree t = parse_tree_prefix(text, pos);
    if (!admits(bound, t)) throw ParseError("tree exceeds arity bound " + bound.to_string(), tree_pos);
    out.add_term(t, sign * c);
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

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << format_element(e); }

}  // namespace magn
