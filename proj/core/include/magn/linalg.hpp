#ifndef MAGN_LINALG_HPP
#define MAGN_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "magn/rational.hpp"

namespace magn {

// (column, value) pairs sorted by column, no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// Sparse exact-rational matrix; rows are appended one at a time.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t cols) : cols_(cols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t cells() const { return rows_.size() * cols_; }

  // Entries may be unsorted and contain duplicates; they are summed.
  void add_row(SparseVector row);
  const std::vector<SparseVector>& row_data() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

// Reduced row echelon form: rows[i] has a 1 in pivot_columns[i] and zeros in
// every other pivot column.
struct Echelon {
  std::vector<std::size_t> pivot_columns;
  std::vector<SparseVector> rows;
};

struct Kernel {
  std::size_t rank = 0;
  // basis[i] has a 1 in free_columns[i] and zeros in the other free columns
  std::vector<std::size_t> free_columns;
  std::vector<SparseVector> basis;
};

// Fraction-free elimination on primitive integer rows; in each column the
// pivot with the smallest bit length is chosen.
std::size_t rank(const RatMatrix& m);
Echelon reduced_echelon(const RatMatrix& m);
Kernel kernel(const RatMatrix& m);

}  // namespace magn

#endif  // MAGN_LINALG_HPP
