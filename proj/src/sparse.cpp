#include "lhh/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace lhh {

void VectorAccumulator::add_scaled(const SparseVector& v, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& e : v) terms_.push_back({e.index, e.value * scale});
}

SparseVector VectorAccumulator::finish() {
  std::sort(terms_.begin(), terms_.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().value += t.value;
    } else {
      if (!out.empty() && out.back().value == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().value == 0) out.pop_back();
  terms_.clear();
  return out;
}

SparseVector unit_vector(std::uint32_t index, const Rational& value) {
  if (value == 0) return {};
  return {SparseEntry{index, value}};
}

SparseVector axpy(const SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0 || x.empty()) return y;
  SparseVector out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].index < y[i].index) {
      out.push_back({x[j].index, a * x[j].value});
      ++j;
    } else {
      Rational v = y[i].value + a * x[j].value;
      if (v != 0) out.push_back({y[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  if (a == 0) return {};
  SparseVector out = x;
  for (auto& e : out) e.value *= a;
  return out;
}

Rational coefficient(const SparseVector& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const SparseEntry& e, std::uint32_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return 0;
}

bool same_vector(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || a[i].value != b[i].value) return false;
  return true;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = unit_vector(static_cast<std::uint32_t>(i));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns_)
    if (!c.empty()) return false;
  return true;
}

void SparseMatrix::set_column(std::size_t j, SparseVector v) {
  if (!v.empty() && v.back().index >= rows_) throw std::out_of_range("SparseMatrix::set_column: row index out of range");
  columns_.at(j) = std::move(v);
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  VectorAccumulator acc;
  for (const auto& e : x) {
    if (e.index >= columns_.size()) throw std::out_of_range("SparseMatrix::apply: vector longer than matrix");
    acc.add_scaled(columns_[e.index], e.value);
  }
  return acc.finish();
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows());
  auto rv = row_vectors();
  for (std::size_t r = 0; r < rv.size(); ++r) t.columns_[r] = std::move(rv[r]);
  return t;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> rv(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) rv[e.index].push_back({static_cast<std::uint32_t>(c), e.value});
  return rv;
}

std::pair<long, long> first_difference(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return {-2, -2};
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto& x = a.columns_[c];
    const auto& y = b.columns_[c];
    if (same_vector(x, y)) continue;
    std::size_t i = 0;
    while (i < x.size() && i < y.size() && x[i].index == y[i].index && x[i].value == y[i].value) ++i;
    std::uint32_t r;
    if (i == x.size()) r = y[i].index;
    else if (i == y.size()) r = x[i].index;
    else r = std::min(x[i].index, y[i].index);
    return {static_cast<long>(r), static_cast<long>(c)};
  }
  return {-1, -1};
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return first_difference(a, b).first == -1; }

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out.set_column(j, a.apply(b.column(j)));
  return out;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const Rational& b_scale) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.set_column(j, axpy(a.column(j), b_scale, b.column(j)));
  return out;
}

SparseMatrix scaled(const SparseMatrix& a, const Rational& s) {
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.set_column(j, scaled(a.column(j), s));
  return out;
}

SparseMatrix block_matrix(const std::vector<std::size_t>& row_sizes, const std::vector<std::size_t>& col_sizes,
                          const std::vector<std::vector<const SparseMatrix*>>& blocks) {
  std::vector<std::size_t> row_off(row_sizes.size() + 1, 0), col_off(col_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < row_sizes.size(); ++i) row_off[i + 1] = row_off[i] + row_sizes[i];
  for (std::size_t i = 0; i < col_sizes.size(); ++i) col_off[i + 1] = col_off[i] + col_sizes[i];
  SparseMatrix out(row_off.back(), col_off.back());
  for (std::size_t bc = 0; bc < col_sizes.size(); ++bc) {
    for (std::size_t j = 0; j < col_sizes[bc]; ++j) {
      SparseVector col;
      for (std::size_t br = 0; br < row_sizes.size(); ++br) {
        const SparseMatrix* m = blocks[br][bc];
        if (m == nullptr || m->cols() == 0) continue;
        if (m->rows() != row_sizes[br] || m->cols() != col_sizes[bc])
          throw std::invalid_argument("block_matrix: block shape mismatch");
        for (const auto& e : m->column(j))
          col.push_back({static_cast<std::uint32_t>(e.index + row_off[br]), e.value});
      }
      out.set_column(col_off[bc] + j, std::move(col));
    }
  }
  return out;
}

}  // namespace lhh
