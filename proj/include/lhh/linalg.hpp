#pragma once

#include "lhh/sparse.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace lhh {

/// Exact rank by fraction-free sparse elimination over the integers.
///
/// Each vector is scaled to a primitive integer vector; elimination steps are
/// v <- (p_i/g) v - (v_i/g) p followed by division by the content, so no
/// fractions are formed. Pivots are chosen Markowitz-style: shortest active
/// vector first, then the pivot index with the fewest occurrences, then the
/// entry of smallest bit length.
std::size_t rank(const SparseMatrix& m);

/// Incremental fully reduced row echelon form over the rationals.
///
/// Rows are kept with leading coefficient 1 at their pivot and zeros in every
/// other pivot position, so reduction is a single pass. With tracking enabled
/// each row also remembers its expression in the accepted input vectors.
class Echelon {
 public:
  explicit Echelon(std::size_t ambient, bool track_combinations = false);

  /// Adds v; returns false (and leaves the form unchanged) if v is already in the span.
  bool insert(const SparseVector& v);
  /// Normal form of v modulo the span. Linear in v; zero iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;
  /// Coefficients of v in the accepted vectors (insertion order), or nullopt if v is not in the span.
  std::optional<SparseVector> solve(const SparseVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return pivot_row_.size(); }
  /// Basis of the orthogonal-free complement: e_f - sum row_q[f] e_{pivot q} for each non-pivot f.
  std::vector<SparseVector> null_space() const;
  bool is_pivot(std::uint32_t index) const { return pivot_row_[index] >= 0; }

 private:
  SparseVector reduce_tracked(const SparseVector& v, SparseVector* combination) const;

  std::vector<SparseVector> rows_;
  std::vector<SparseVector> combos_;
  std::vector<std::uint32_t> pivots_;
  std::vector<long> pivot_row_;
  bool track_;
  std::size_t accepted_ = 0;
};

/// Basis of the right kernel, one vector per non-pivot column in increasing order.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<SparseVector> kernel;
  /// Earliest independent columns of the matrix.
  std::vector<SparseVector> image;
  std::vector<std::size_t> image_columns;
  /// Answers membership in the column span; coefficients refer to `image`.
  std::shared_ptr<const Echelon> solver;
};

RankKernelImage rank_kernel_image(const SparseMatrix& m);

}  // namespace lhh
