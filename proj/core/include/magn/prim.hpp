#ifndef MAGN_PRIM_HPP
#define MAGN_PRIM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "magn/element.hpp"
#include "magn/linalg.hpp"
#include "magn/symfun.hpp"

namespace magn {

struct PrimOptions {
  // Hard cap on rows * columns of the constraint matrix.
  std::size_t cell_cap = 100'000'000;
  // Use every slice degree 1..n-1 instead of 1 <= deg < (n+1)/2.
  bool full_criterion = false;
};

// Basis of the primitive elements of one multihomogeneous component.
// vectors[i] has coefficient 1 at leading[i] and 0 at every other leading tree.
struct Basis {
  ArityBound bound = ArityBound::omega();
  std::vector<Label> labels;  // sorted leaf-label multiset
  std::vector<Tree> ambient;  // monomial basis of the component
  std::vector<Tree> leading;
  std::vector<Element> vectors;

  std::size_t degree() const { return labels.size(); }
  std::size_t dimension() const { return vectors.size(); }
  // Coordinates of e in this basis; nullopt when e is not in the span.
  std::optional<std::vector<Rational>> coordinates(const Element& e) const;
};

// Sparse coordinate vector of e over the indexed monomials.
SparseVector to_sparse(const Element& e, const std::map<Tree, std::size_t>& index);

// Rank of the span of the given elements.
std::size_t rank(std::span<const Element> elements);

// Kernel of f -> (partial(T, f))_T over the component with leaf multiset `labels`.
Basis primitive_basis(std::span<const Label> labels, ArityBound bound, const PrimOptions& opts = {});
Basis primitive_basis_multilinear(std::size_t n, ArityBound bound, const PrimOptions& opts = {});
// Dimension only (no back substitution).
std::size_t primitive_dimension(std::span<const Label> labels, ArityBound bound, const PrimOptions& opts = {});
std::size_t primitive_dimension_multilinear(std::size_t n, ArityBound bound, const PrimOptions& opts = {});

// (n-1)! c[N]'_n
Integer prim_dim_formula(std::size_t n, ArityBound bound);

// Primitive bases of every nonempty proper sub-multiset of `labels`, ordered
// by size and then lexicographically.
std::vector<Basis> lower_primitive_bases(std::span<const Label> labels, ArityBound bound, const PrimOptions& opts = {});

// Weakly increasing shuffle monomials f_{i1} sh ... sh f_{ik}, k >= 2, of
// primitive basis vectors whose labels add up to `labels`. The index order is
// the order of `lower` and then of each basis.
std::vector<Element> pbw_complement_basis(std::span<const Label> labels, ArityBound bound, std::span<const Basis> lower);

// Character of the Sigma_n-module Prim Mag_N(n) on each cycle type.
std::map<Partition, Rational> character(std::size_t n, ArityBound bound, const PrimOptions& opts = {});
std::map<Partition, Rational> character(const Basis& multilinear);

// Permutation of 1..n with consecutive cycles of the given lengths.
std::vector<Label> cycle_type_representative(const Partition& lambda);

}  // namespace magn

#endif  // MAGN_PRIM_HPP
