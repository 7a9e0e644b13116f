#include "magn/tree.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <ostream>
#include <utility>

#include "magn/errors.hpp"

namespace magn {

ArityBound ArityBound::finite(unsigned n) {
  if (n < 2) throw DomainError("arity bound must be >= 2, got " + std::to_string(n));
  return ArityBound(n);
}

ArityBound ArityBound::parse(std::string_view text) {
  if (text == "omega" || text == "w") return omega();
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("invalid arity bound '" + std::string(text) + "'", 0);
  return finite(n);
}

std::string ArityBound::to_string() const {
  return is_omega() ? std::string("omega") : std::to_string(n_);
}

Tree Tree::leaf(Label label) {
  if (label == 0) throw DomainError("leaf labels start at 1");
  Tree t;
  t.label_ = label;
  t.degree_ = 1;
  return t;
}

Tree Tree::node(std::vector<Tree> children) {
  if (children.size() < 2) throw DomainError("internal vertex needs at least 2 children");
  Tree t;
  std::uint32_t degree = 0;
  std::uint32_t max_arity = static_cast<std::uint32_t>(children.size());
  for (const Tree& c : children) {
    if (c.is_empty()) throw DomainError("the empty tree cannot be a child");
    degree += c.degree_;
    max_arity = std::max(max_arity, c.max_arity_);
  }
  t.degree_ = degree;
  t.max_arity_ = max_arity;
  t.children_ = std::move(children);
  return t;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (a.degree_ <= 1) return a.label_ <=> b.label_;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                b.children_.begin(), b.children_.end());
}

bool operator==(const Tree& a, const Tree& b) {
  return a.degree_ == b.degree_ && a.label_ == b.label_ && a.children_ == b.children_;
}

namespace {

void format_into(const Tree& t, std::string& out) {
  if (t.is_empty()) {
    out += '1';
  } else if (t.is_leaf()) {
    out += 'x';
    out += std::to_string(t.label());
  } else {
    out += '(';
    bool first = true;
    for (const Tree& c : t.children()) {
      if (!first) out += ' ';
      first = false;
      format_into(c, out);
    }
    out += ')';
  }
}

Tree parse_at(std::string_view text, std::size_t& pos, bool as_child) {
  if (pos >= text.size()) throw ParseError("unexpected end of tree", pos);
  char ch = text[pos];
  if (ch == '1') {
    if (as_child) throw ParseError("the empty tree cannot be a child", pos);
    ++pos;
    return Tree::empty();
  }
  if (ch == 'x') {
    std::size_t start = ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw ParseError("expected variable index", pos);
    if (text[start] == '0') throw ParseError("variable index must be positive without leading zeros", start);
    Label label = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, label);
    if (ec != std::errc()) throw ParseError("variable index out of range", start);
    return Tree::leaf(label);
  }
  if (ch == '(') {
    std::size_t open = pos++;
    std::vector<Tree> children;
    children.push_back(parse_at(text, pos, true));
    while (pos < text.size() && text[pos] == ' ') {
      ++pos;
      children.push_back(parse_at(text, pos, true));
    }
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ' ' or ')'", pos);
    ++pos;
    if (children.size() < 2) throw ParseError("unary vertex", open);
    return Tree::node(std::move(children));
  }
  throw ParseError(std::string("unexpected character '") + ch + "'", pos);
}

void collect_labels(const Tree& t, std::vector<Label>& out) {
  if (t.is_leaf()) {
    out.push_back(t.label());
    return;
  }
  for (const Tree& c : t.children()) collect_labels(c, out);
}

Tree relabel_at(const Tree& t, std::span<const Label> labels, std::size_t& pos) {
  if (t.is_empty()) return t;
  if (t.is_leaf()) return Tree::leaf(labels[pos++]);
  std::vector<Tree> children;
  children.reserve(t.arity());
  for (const Tree& c : t.children()) children.push_back(relabel_at(c, labels, pos));
  return Tree::node(std::move(children));
}

Tree restrict_at(const Tree& t, LeafMask selected, std::size_t& pos) {
  if (t.is_leaf()) {
    bool keep = (selected >> pos) & 1U;
    ++pos;
    return keep ? t : Tree::empty();
  }
  std::vector<Tree> kept;
  for (const Tree& c : t.children()) {
    Tree r = restrict_at(c, selected, pos);
    if (!r.is_empty()) kept.push_back(std::move(r));
  }
  if (kept.empty()) return Tree::empty();
  if (kept.size() == 1) return std::move(kept.front());
  return Tree::node(std::move(kept));
}

Tree compose_at(const Tree& t1, std::size_t i, const Tree& t2, std::size_t& pos) {
  if (t1.is_leaf()) return (++pos == i) ? t2 : t1;
  std::vector<Tree> children;
  children.reserve(t1.arity());
  for (const Tree& c : t1.children()) {
    // subtrees entirely left or right of the target are copied unchanged
    if (pos >= i || pos + c.degree() < i) {
      pos += c.degree();
      children.push_back(c);
    } else {
      children.push_back(compose_at(c, i, t2, pos));
    }
  }
  return Tree::node(std::move(children));
}

// Ordered forests of total degree m with between 1 and max_len trees, in
// canonical (lexicographic) order.
std::vector<std::vector<Tree>> forests(std::size_t m, std::size_t max_len, ArityBound bound);

std::vector<Tree> shapes_uncached(std::size_t n, ArityBound bound) {
  if (n == 1) return {Tree::leaf(1)};
  std::size_t max_arity = bound.is_omega() ? n : std::min<std::size_t>(bound.value(), n);
  std::vector<Tree> out;
  for (std::size_t d1 = 1; d1 < n; ++d1) {
    std::vector<Tree> firsts = enumerate_shapes(d1, bound);
    std::vector<std::vector<Tree>> rests = forests(n - d1, max_arity - 1, bound);
    for (const Tree& first : firsts) {
      for (const auto& rest : rests) {
        std::vector<Tree> children;
        children.reserve(rest.size() + 1);
        children.push_back(first);
        children.insert(children.end(), rest.begin(), rest.end());
        out.push_back(Tree::node(std::move(children)));
      }
    }
  }
  return out;
}

std::vector<std::vector<Tree>> forests(std::size_t m, std::size_t max_len, ArityBound bound) {
  std::vector<std::vector<Tree>> out;
  if (max_len == 0) return out;
  for (std::size_t d = 1; d <= m; ++d) {
    std::vector<Tree> heads = enumerate_shapes(d, bound);
    if (d == m) {
      for (const Tree& h : heads) out.push_back({h});
      continue;
    }
    std::vector<std::vector<Tree>> tails = forests(m - d, max_len - 1, bound);
    for (const Tree& h : heads) {
      for (const auto& tail : tails) {
        std::vector<Tree> f;
        f.reserve(tail.size() + 1);
        f.push_back(h);
        f.insert(f.end(), tail.begin(), tail.end());
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

// Number of ordered forests of k trees with m leaves is a convolution power of
// the tree counts; tree_counts[n] sums over admissible root arities.
std::vector<Integer> bounded_counts(ArityBound bound, std::size_t n_max) {
  std::vector<Integer> trees(n_max + 1, 0);
  if (n_max >= 1) trees[1] = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    // forest[m] = ordered forests with current k trees and m leaves (trees of degree < n)
    std::vector<Integer> forest(n + 1, 0);
    for (std::size_t m = 1; m < n; ++m) forest[m] = trees[m];
    Integer total = 0;
    std::size_t k_max = bound.is_omega() ? n : std::min<std::size_t>(bound.value(), n);
    for (std::size_t k = 2; k <= k_max; ++k) {
      std::vector<Integer> next(n + 1, 0);
      for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t j = 1; j < m && j < n; ++j) next[m] += forest[m - j] * trees[j];
      forest = std::move(next);
      total += forest[n];
    }
    trees[n] = total;
  }
  return trees;
}

void require_positive(std::size_t n) {
  if (n == 0) throw DomainError("leaf count must be >= 1");
}

}  // namespace

std::string format_tree(const Tree& t) {
  std::string out;
  format_into(t, out);
  return out;
}

Tree parse_tree_prefix(std::string_view text, std::size_t& pos) { return parse_at(text, pos, false); }

Tree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  Tree t = parse_at(text, pos, false);
  if (pos != text.size()) throw ParseError("trailing characters after tree", pos);
  return t;
}

std::ostream& operator<<(std::ostream& os, const Tree& t) { return os << format_tree(t); }

std::vector<Label> leaf_labels(const Tree& t) {
  std::vector<Label> out;
  out.reserve(t.degree());
  collect_labels(t, out);
  return out;
}

Tree shape_of(const Tree& t) {
  std::vector<Label> ones(t.degree(), 1);
  return relabel_leaves(t, ones);
}

Tree relabel_leaves(const Tree& t, std::span<const Label> labels) {
  if (labels.size() != t.degree()) throw DomainError("label count does not match the number of leaves");
  std::size_t pos = 0;
  return relabel_at(t, labels, pos);
}

std::vector<Tree> enumerate_shapes(std::size_t n, ArityBound bound) {
  require_positive(n);
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, std::vector<Tree>> cache;
  auto key = std::make_pair(n, bound.value());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<Tree> result = shapes_uncached(n, bound);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

Tree compose(const Tree& t1, std::size_t i, const Tree& t2) {
  if (t1.is_empty() || t2.is_empty()) throw DomainError("compose needs nonempty trees");
  if (i < 1 || i > t1.degree())
    throw DomainError("leaf position " + std::to_string(i) + " out of range 1.." + std::to_string(t1.degree()));
  std::size_t pos = 0;
  return compose_at(t1, i, t2, pos);
}

Tree graft(std::vector<Tree> forest) {
  if (forest.size() < 2) throw DomainError("grafting needs at least 2 trees");
  return Tree::node(std::move(forest));
}

Tree restrict_reduce(const Tree& t, LeafMask selected) {
  if (t.degree() > kMaxMaskDegree) throw DomainError("restriction supports at most 63 leaves");
  if (selected & ~full_mask(t.degree())) throw DomainError("leaf position out of range");
  if (t.is_empty()) return t;
  std::size_t pos = 0;
  return restrict_at(t, selected, pos);
}

Tree restrict_reduce(const Tree& t, std::span<const std::size_t> positions) {
  LeafMask mask = 0;
  for (std::size_t p : positions) {
    if (p < 1 || p > t.degree()) throw DomainError("leaf position " + std::to_string(p) + " out of range");
    mask |= LeafMask{1} << (p - 1);
  }
  return restrict_reduce(t, mask);
}

Integer catalan(std::size_t n) {
  require_positive(n);
  return binomial(static_cast<unsigned>(2 * (n - 1)), static_cast<unsigned>(n - 1)) / Integer(static_cast<unsigned long>(n));
}

Integer super_catalan(std::size_t n) { return c_bounded(ArityBound::omega(), n); }

Integer c_bounded(ArityBound bound, std::size_t n) {
  require_positive(n);
  return bounded_counts(bound, n)[n];
}

}  // namespace magn
