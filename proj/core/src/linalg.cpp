#include "magn/linalg.hpp"

#include <algorithm>
#include <map>

#include "magn/errors.hpp"

namespace magn {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

// Scales to coprime integers with a positive leading entry.
void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseVector& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
  make_primitive(out);
  return out;
}

// alpha * a - beta * b, dropping zeros.
IntRow lincomb(const Integer& alpha, const IntRow& a, const Integer& beta, const IntRow& b) {
  IntRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Integer tmp;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, alpha * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -beta * b[j].second);
      ++j;
    } else {
      tmp = alpha * a[i].second - beta * b[j].second;
      if (tmp != 0) out.emplace_back(a[i].first, tmp);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

// Eliminates `pivot`'s leading column from `row`.
IntRow eliminate(const IntRow& row, const IntRow& pivot, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return row;
  const Integer& p = pivot.front().second;
  Integer g = gcd(p, it->second);
  return lincomb(Integer(p / g), row, Integer(it->second / g), pivot);
}

std::size_t bit_length(const Integer& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

// Forward elimination; returns pivot rows in increasing pivot column order.
std::vector<IntRow> forward(const RatMatrix& m) {
  std::map<std::size_t, std::vector<IntRow>> buckets;
  for (const SparseVector& r : m.row_data()) {
    IntRow row = to_int_row(r);
    if (!row.empty()) buckets[row.front().first].push_back(std::move(row));
  }
  std::vector<IntRow> pivots;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    std::size_t col = node.key();
    std::vector<IntRow>& rows = node.mapped();
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (bit_length(rows[i].front().second) < bit_length(rows[best].front().second)) best = i;
    std::swap(rows[0], rows[best]);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      IntRow reduced = eliminate(rows[i], rows[0], col);
      if (!reduced.empty()) buckets[reduced.front().first].push_back(std::move(reduced));
    }
    pivots.push_back(std::move(rows[0]));
  }
  return pivots;
}

}  // namespace

void RatMatrix::add_row(SparseVector row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector merged;
  merged.reserve(row.size());
  for (auto& [c, v] : row) {
    if (c >= cols_) throw DomainError("matrix column index out of range");
    if (!merged.empty() && merged.back().first == c) {
      merged.back().second += v;
      if (merged.back().second == 0) merged.pop_back();
    } else if (v != 0) {
      merged.emplace_back(c, std::move(v));
    }
  }
  rows_.push_back(std::move(merged));
}

std::size_t rank(const RatMatrix& m) { return forward(m).size(); }

Echelon reduced_echelon(const RatMatrix& m) {
  std::vector<IntRow> rows = forward(m);
  std::vector<std::ptrdiff_t> row_of_col(m.cols(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) row_of_col[rows[i].front().first] = static_cast<std::ptrdiff_t>(i);

  for (std::size_t i = rows.size(); i-- > 0;) {
    // clear entries of row i in the pivot columns of later rows
    std::size_t k = 1;
    while (k < rows[i].size()) {
      std::size_t col = rows[i][k].first;
      std::ptrdiff_t j = row_of_col[col];
      if (j < 0) {
        ++k;
        continue;
      }
      rows[i] = eliminate(rows[i], rows[static_cast<std::size_t>(j)], col);
      // entries before position k are unaffected: row j starts at col
      while (k < rows[i].size() && rows[i][k].first <= col) ++k;
    }
  }

  Echelon out;
  out.pivot_columns.reserve(rows.size());
  out.rows.reserve(rows.size());
  for (IntRow& r : rows) {
    out.pivot_columns.push_back(r.front().first);
    Integer lead = r.front().second;
    SparseVector v;
    v.reserve(r.size());
    for (auto& [c, x] : r) {
      Rational q(x, lead);
      q.canonicalize();
      v.emplace_back(c, std::move(q));
    }
    out.rows.push_back(std::move(v));
  }
  return out;
}

Kernel kernel(const RatMatrix& m) {
  Echelon e = reduced_echelon(m);
  Kernel out;
  out.rank = e.rows.size();
  std::vector<std::ptrdiff_t> free_index(m.cols(), -1);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = static_cast<std::ptrdiff_t>(out.free_columns.size());
    out.free_columns.push_back(c);
  }
  out.basis.resize(out.free_columns.size());
  for (std::size_t f = 0; f < out.free_columns.size(); ++f) out.basis[f].emplace_back(out.free_columns[f], 1);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    std::size_t pc = e.pivot_columns[i];
    for (const auto& [c, v] : e.rows[i]) {
      if (c == pc) continue;
      out.basis[static_cast<std::size_t>(free_index[c])].emplace_back(pc, -v);
    }
  }
  for (SparseVector& v : out.basis)
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace magn
