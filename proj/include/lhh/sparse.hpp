#pragma once

#include "lhh/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lhh {

struct SparseEntry {
  std::uint32_t index;
  Rational value;
};

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

/// Collects unsorted (index, value) contributions and folds them into a SparseVector.
class VectorAccumulator {
 public:
  void add(std::uint32_t index, const Rational& value) {
    if (value != 0) terms_.push_back({index, value});
  }
  void add_scaled(const SparseVector& v, const Rational& scale);
  bool empty() const { return terms_.empty(); }
  SparseVector finish();

 private:
  std::vector<SparseEntry> terms_;
};

SparseVector unit_vector(std::uint32_t index, const Rational& value = 1);
/// y + a*x
SparseVector axpy(const SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Rational& a);
Rational coefficient(const SparseVector& v, std::uint32_t index);
bool same_vector(const SparseVector& a, const SparseVector& b);

/// Column-major sparse rational matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const;

  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  void set_column(std::size_t j, SparseVector v);
  Rational at(std::size_t r, std::size_t c) const { return coefficient(columns_[c], static_cast<std::uint32_t>(r)); }

  SparseVector apply(const SparseVector& x) const;
  SparseMatrix transpose() const;
  /// Rows of the matrix as sparse vectors over column indices.
  std::vector<SparseVector> row_vectors() const;

  /// (row, col) of the first entry where the matrices differ, or (-1,-1) when equal.
  friend std::pair<long, long> first_difference(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const Rational& b_scale = 1);
SparseMatrix scaled(const SparseMatrix& a, const Rational& s);
/// Places blocks on a grid; blocks[r][c] may be empty (0x0) meaning zero of the implied shape.
SparseMatrix block_matrix(const std::vector<std::size_t>& row_sizes, const std::vector<std::size_t>& col_sizes,
                          const std::vector<std::vector<const SparseMatrix*>>& blocks);

}  // namespace lhh
