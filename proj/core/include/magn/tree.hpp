#ifndef MAGN_TREE_HPP
#define MAGN_TREE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "magn/rational.hpp"

namespace magn {

using Label = std::uint32_t;

// Maximal arity N of the generating operations; omega means unbounded.
class ArityBound {
 public:
  static constexpr ArityBound omega() { return ArityBound(); }
  static ArityBound finite(unsigned n);
  static ArityBound parse(std::string_view text);  // "2", "3", ..., "omega"

  constexpr bool is_omega() const { return n_ == 0; }
  constexpr unsigned value() const { return n_; }  // only meaningful when finite
  constexpr bool admits(std::size_t arity) const { return is_omega() || arity <= n_; }

  std::string to_string() const;

  friend constexpr bool operator==(ArityBound, ArityBound) = default;

 private:
  constexpr ArityBound() = default;
  constexpr explicit ArityBound(unsigned n) : n_(n) {}

  unsigned n_ = 0;
};

// Planar reduced rooted tree with leaves labeled by variables x_k (k >= 1).
// The empty tree is the unit 1 of the free algebra.
//
// Total order: smaller degree first; leaves by label; nodes of equal degree
// lexicographically by their children (a proper prefix comes first).
class Tree {
 public:
  Tree() = default;  // the empty tree

  static Tree empty() { return Tree(); }
  static Tree leaf(Label label);
  // Requires >= 2 children, none of them empty.
  static Tree node(std::vector<Tree> children);

  bool is_empty() const { return degree_ == 0; }
  bool is_leaf() const { return label_ != 0; }
  bool is_node() const { return !children_.empty(); }

  Label label() const { return label_; }
  std::size_t degree() const { return degree_; }
  std::size_t arity() const { return children_.size(); }
  // Largest arity of an internal vertex; 0 for leaves and the empty tree.
  std::size_t max_arity() const { return max_arity_; }
  std::span<const Tree> children() const { return children_; }

  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
  friend bool operator==(const Tree& a, const Tree& b);

 private:
  Label label_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t max_arity_ = 0;
  std::vector<Tree> children_;
};

inline bool admits(ArityBound bound, const Tree& t) { return bound.admits(t.max_arity()); }

// Canonical text encoding: "1" | "x<k>" | "(" tree (" " tree)+ ")".
std::string format_tree(const Tree& t);
Tree parse_tree(std::string_view text);
// Parses one tree starting at `pos` and advances `pos` past it.
Tree parse_tree_prefix(std::string_view text, std::size_t& pos);

std::ostream& operator<<(std::ostream& os, const Tree& t);

// Leaf labels in planar (left to right) order.
std::vector<Label> leaf_labels(const Tree& t);

// The same tree with every leaf relabeled x1. Shapes are represented this way.
Tree shape_of(const Tree& t);

// Assigns `labels` to the leaves of `t` in planar order.
Tree relabel_leaves(const Tree& t, std::span<const Label> labels);

// All shapes with n >= 1 leaves whose arities respect `bound`, in canonical order.
std::vector<Tree> enumerate_shapes(std::size_t n, ArityBound bound);

// Substitutes t2 for the i-th leaf (1-based) of t1.
Tree compose(const Tree& t1, std::size_t i, const Tree& t2);

// New root of arity forest.size() >= 2 over the given nonempty trees.
Tree graft(std::vector<Tree> forest);

// Bit i-1 selects leaf position i.
using LeafMask = std::uint64_t;
inline constexpr std::size_t kMaxMaskDegree = 63;

// Keeps the paths from the selected leaves to the root and contracts unary
// vertices. No selected leaf gives the empty tree.
Tree restrict_reduce(const Tree& t, LeafMask selected);
Tree restrict_reduce(const Tree& t, std::span<const std::size_t> positions);

inline LeafMask full_mask(std::size_t degree) {
  return degree >= 64 ? ~LeafMask{0} : ((LeafMask{1} << degree) - 1);
}

Integer catalan(std::size_t n);
Integer super_catalan(std::size_t n);
Integer c_bounded(ArityBound bound, std::size_t n);

}  // namespace magn

#endif  // MAGN_TREE_HPP
