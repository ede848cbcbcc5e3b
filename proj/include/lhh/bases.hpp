#pragma once

#include "lhh/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lhh {

/// Basis of A^{(x) n}: mixed-radix codes with slot 0 most significant.
///
/// With a matrix algebra and `weight_zero` set, only tensors whose multiset of
/// row indices equals the multiset of column indices are kept (the torus-weight-0
/// summand, which every bracket and product preserves).
class TensorBasis {
 public:
  TensorBasis(std::size_t d, int slots, const MatrixData* weight_zero = nullptr);

  std::size_t size() const { return filtered_ ? codes_.size() : total_; }
  int slots() const { return slots_; }
  std::size_t radix() const { return d_; }
  bool filtered() const { return filtered_; }

  std::uint64_t code(std::size_t index) const { return filtered_ ? codes_[index] : index; }
  /// Index of a code; nullopt if the code lies outside the filtered summand.
  std::optional<std::size_t> index(std::uint64_t code) const;
  void decode_code(std::uint64_t code, std::vector<int>& out) const;
  void decode(std::size_t index, std::vector<int>& out) const { decode_code(code(index), out); }
  std::uint64_t encode(const std::vector<int>& letters) const;

 private:
  std::size_t d_;
  int slots_;
  bool filtered_ = false;
  std::uint64_t total_ = 1;
  std::vector<std::uint64_t> codes_;
};

/// Number of basis tensors of A^{(x) n} of torus weight 0 in gl_N(A) (d = dim A).
std::uint64_t weight_zero_count(int N, std::size_t d, int slots);

/// Basis of Lambda^n(V), dim V = d: increasing index tuples in lexicographic order.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t d, int n);
  std::size_t size() const { return subsets_.size(); }
  const std::vector<int>& subset(std::size_t index) const { return subsets_[index]; }
  /// Index of an increasing tuple.
  std::size_t index(const std::vector<int>& increasing) const;
  /// Sorts `letters` in place; returns the sign of the sorting permutation, 0 if a letter repeats.
  static int normalize(std::vector<int>& letters);

 private:
  std::size_t d_;
  int n_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::vector<std::size_t>> binom_;
};

/// Basis of A^{(x)(n+1)} / (1 - t), t(a_0..a_n) = (-1)^n (a_n, a_0, ..., a_{n-1}).
///
/// One representative per rotation orbit, the lexicographically least code; an
/// orbit whose stabilizer contains a rotation of sign -1 is zero in the quotient.
class CyclicQuotientBasis {
 public:
  CyclicQuotientBasis(std::size_t d, int n);
  std::size_t size() const { return representatives_.size(); }
  std::uint64_t representative(std::size_t index) const { return representatives_[index]; }
  /// Class of a tensor code: (sign, index) or sign 0 when the class is zero.
  std::pair<int, std::size_t> project(std::uint64_t code) const { return projection_[code]; }
  std::size_t ambient() const { return projection_.size(); }

 private:
  std::vector<std::uint64_t> representatives_;
  std::vector<std::pair<int, std::size_t>> projection_;
};

std::string tensor_label(const Algebra& a, const std::vector<int>& letters);

}  // namespace lhh
