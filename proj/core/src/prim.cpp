#include "magn/prim.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "magn/errors.hpp"
#include "magn/hopf.hpp"
#include "magn/series.hpp"

namespace magn {

std::optional<std::vector<Rational>> Basis::coordinates(const Element& e) const {
  std::vector<Rational> coords;
  coords.reserve(vectors.size());
  Element rebuilt(bound);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Rational c = e.coefficient(leading[i]);
    if (c != 0) rebuilt += c * vectors[i];
    coords.push_back(std::move(c));
  }
  if (!(rebuilt == e)) return std::nullopt;
  return coords;
}

SparseVector to_sparse(const Element& e, const std::map<Tree, std::size_t>& index) {
  SparseVector v;
  v.reserve(e.size());
  for (const auto& [t, c] : e.terms()) {
    auto it = index.find(t);
    if (it == index.end()) throw DomainError("element has a monomial outside the indexed component");
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::size_t rank(std::span<const Element> elements) {
  std::map<Tree, std::size_t> index;
  for (const Element& e : elements)
    for (const auto& [t, c] : e.terms()) index.emplace(t, 0);
  std::size_t k = 0;
  for (auto& [t, i] : index) i = k++;
  RatMatrix m(index.size());
  for (const Element& e : elements) m.add_row(to_sparse(e, index));
  return rank(m);
}

namespace {

std::vector<Label> sorted_labels(std::span<const Label> labels) {
  if (labels.empty()) throw DomainError("primitive basis needs a nonempty label multiset");
  if (labels.size() > kMaxMaskDegree) throw DomainError("degree exceeds the leaf-mask limit");
  std::vector<Label> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end());
  if (out.front() == 0) throw DomainError("labels must be positive");
  return out;
}

// Rows are the monomial pairs T (x) S with deg T in the criterion range;
// column j is the ambient tree j.
RatMatrix constraint_matrix(const std::vector<Tree>& ambient, std::size_t n, const PrimOptions& opts) {
  std::size_t max_left = opts.full_criterion ? n - 1 : n / 2;  // deg T < (n+1)/2
  if (max_left == 0) return RatMatrix(ambient.size());
  std::map<TreePair, std::size_t> row_of;
  std::vector<SparseVector> rows;
  LeafMask full = full_mask(n);
  for (std::size_t j = 0; j < ambient.size(); ++j) {
    const Tree& t = ambient[j];
    for (LeafMask mask = 1; mask < full; ++mask) {
      auto k = static_cast<std::size_t>(std::popcount(mask));
      if (k > max_left) continue;
      TreePair key(restrict_reduce(t, mask), restrict_reduce(t, full & ~mask));
      auto [it, inserted] = row_of.try_emplace(std::move(key), rows.size());
      if (inserted) rows.emplace_back();
      rows[it->second].emplace_back(j, 1);
    }
    if (row_of.size() > 0 && row_of.size() * ambient.size() > opts.cell_cap)
      throw ResourceLimitError("primitive-space matrix exceeds the cell cap of " + std::to_string(opts.cell_cap));
  }
  RatMatrix m(ambient.size());
  for (SparseVector& r : rows) m.add_row(std::move(r));
  return m;
}

Basis make_basis(std::vector<Label> labels, ArityBound bound, std::vector<Tree> ambient, const Kernel& k) {
  Basis b;
  b.bound = bound;
  b.labels = std::move(labels);
  b.ambient = std::move(ambient);
  b.leading.reserve(k.free_columns.size());
  b.vectors.reserve(k.basis.size());
  for (std::size_t i = 0; i < k.basis.size(); ++i) {
    b.leading.push_back(b.ambient[k.free_columns[i]]);
    Element e(bound);
    for (const auto& [c, v] : k.basis[i]) e.add_term(b.ambient[c], v);
    b.vectors.push_back(std::move(e));
  }
  return b;
}

std::vector<Label> iota_labels(std::size_t n) {
  if (n == 0) throw DomainError("multilinear component needs n >= 1");
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{1});
  return labels;
}

}  // namespace

Basis primitive_basis(std::span<const Label> labels, ArityBound bound, const PrimOptions& opts) {
  std::vector<Label> sorted = sorted_labels(labels);
  std::vector<Tree> ambient = component_basis(sorted, bound);
  RatMatrix m = constraint_matrix(ambient, sorted.size(), opts);
  return make_basis(std::move(sorted), bound, std::move(ambient), kernel(m));
}

Basis primitive_basis_multilinear(std::size_t n, ArityBound bound, const PrimOptions& opts) {
  return primitive_basis(iota_labels(n), bound, opts);
}

std::size_t primitive_dimension(std::span<const Label> labels, ArityBound bound, const PrimOptions& opts) {
  std::vector<Label> sorted = sorted_labels(labels);
  std::vector<Tree> ambient = component_basis(sorted, bound);
  RatMatrix m = constraint_matrix(ambient, sorted.size(), opts);
  return ambient.size() - rank(m);
}

std::size_t primitive_dimension_multilinear(std::size_t n, ArityBound bound, const PrimOptions& opts) {
  return primitive_dimension(iota_labels(n), bound, opts);
}

Integer prim_dim_formula(std::size_t n, ArityBound bound) {
  if (n == 0) throw DomainError("prim_dim_formula needs n >= 1");
  std::vector<Integer> cp = log_bounded_sequence(bound, n);
  return factorial(static_cast<unsigned>(n - 1)) * cp[n - 1];
}

std::vector<Basis> lower_primitive_bases(std::span<const Label> labels, ArityBound bound, const PrimOptions& opts) {
  std::vector<Label> sorted = sorted_labels(labels);
  std::vector<Label> distinct;
  std::vector<std::size_t> counts;
  for (Label l : sorted) {
    if (distinct.empty() || distinct.back() != l) {
      distinct.push_back(l);
      counts.push_back(0);
    }
    ++counts.back();
  }
  std::vector<std::vector<Label>> subs;
  std::vector<std::size_t> pick(distinct.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < pick.size() && pick[i] == counts[i]) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
    std::vector<Label> sub;
    for (std::size_t d = 0; d < distinct.size(); ++d) sub.insert(sub.end(), pick[d], distinct[d]);
    if (sub.size() < sorted.size()) subs.push_back(std::move(sub));
  }
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Basis> out;
  out.reserve(subs.size());
  for (const auto& sub : subs) out.push_back(primitive_basis(sub, bound, opts));
  return out;
}

std::vector<Element> pbw_complement_basis(std::span<const Label> labels, ArityBound bound, std::span<const Basis> lower) {
  std::vector<Label> target = sorted_labels(labels);
  struct Factor {
    const Element* vector;
    const std::vector<Label>* labels;
  };
  std::vector<Factor> factors;
  for (const Basis& b : lower) {
    require_same_bound(bound, b.bound);
    if (b.labels.size() >= target.size() || !std::includes(target.begin(), target.end(), b.labels.begin(), b.labels.end()))
      throw DomainError("lower basis labels are not a proper sub-multiset of the component labels");
    for (const Element& v : b.vectors) factors.push_back({&v, &b.labels});
  }

  std::vector<Element> out;
  std::function<void(std::size_t, const std::vector<Label>&, const Element&, std::size_t)> rec =
      [&](std::size_t start, const std::vector<Label>& remaining, const Element& product, std::size_t used) {
        if (remaining.empty()) {
          if (used >= 2) out.push_back(product);
          return;
        }
        for (std::size_t i = start; i < factors.size(); ++i) {
          const std::vector<Label>& fl = *factors[i].labels;
          if (fl.size() > remaining.size() || !std::includes(remaining.begin(), remaining.end(), fl.begin(), fl.end()))
            continue;
          std::vector<Label> rest;
          std::set_difference(remaining.begin(), remaining.end(), fl.begin(), fl.end(), std::back_inserter(rest));
          Element next = used == 0 ? *factors[i].vector : shuffle(product, *factors[i].vector);
          rec(i, rest, next, used + 1);
        }
      };
  rec(0, target, Element::unit(bound), 0);
  return out;
}

std::vector<Label> cycle_type_representative(const Partition& lambda) {
  std::vector<Label> perm(lambda.weight());
  Label start = 1;
  for (unsigned len : lambda.parts()) {
    for (unsigned i = 0; i < len; ++i) perm[start - 1 + i] = start + (i + 1) % len;
    start += len;
  }
  return perm;
}

std::map<Partition, Rational> character(const Basis& b) {
  std::size_t n = b.degree();
  std::vector<Label> expected = iota_labels(n);
  if (b.labels != expected) throw DomainError("character requires a multilinear basis");
  std::map<Partition, Rational> out;
  for (const Partition& lambda : partitions(static_cast<unsigned>(n))) {
    std::vector<Label> perm = cycle_type_representative(lambda);
    Rational trace = 0;
    for (std::size_t i = 0; i < b.vectors.size(); ++i) {
      Element moved = relabel(b.vectors[i], perm);
      std::optional<std::vector<Rational>> coords = b.coordinates(moved);
      if (!coords) throw Error("relabeled primitive left the primitive span");
      trace += (*coords)[i];
    }
    out.emplace(lambda, trace);
  }
  return out;
}

std::map<Partition, Rational> character(std::size_t n, ArityBound bound, const PrimOptions& opts) {
  return character(primitive_basis_multilinear(n, bound, opts));
}

}  // namespace magn
