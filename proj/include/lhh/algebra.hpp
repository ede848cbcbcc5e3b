#pragma once

#include "lhh/sparse.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhh {

/// Thrown when an input algebra, morphism or table is malformed.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cayley data of a finite group whose elements are the algebra basis.
struct GroupData {
  std::vector<std::vector<int>> table;  // table[g][h] = index of g*h
  int identity = 0;
  std::vector<int> inverse;
  int order() const { return static_cast<int>(table.size()); }
  int mul(int g, int h) const { return table[g][h]; }
};

class Algebra;

/// Index metadata carried by M_N(A): basis element (i*N + j)*dim(A) + b is E^{e_b}_{ij}.
struct MatrixData {
  int size = 0;
  std::shared_ptr<const Algebra> base;
  int row(std::size_t k) const;
  int col(std::size_t k) const;
  int entry(std::size_t k) const;
  std::size_t index(int i, int j, int b) const;
};

using AlgebraElement = SparseVector;

/// Finite-dimensional unital associative algebra over Q given by structure constants.
class Algebra {
 public:
  Algebra(std::string name, std::vector<std::string> basis_names, SparseVector unit,
          std::vector<SparseVector> table);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const SparseVector& unit() const { return unit_; }
  /// Coordinates of e_i * e_j.
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  /// Coordinates of [e_i, e_j] = e_i e_j - e_j e_i.
  const SparseVector& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }
  bool is_commutative() const { return commutative_; }

  const std::optional<GroupData>& group() const { return group_; }
  const std::optional<MatrixData>& matrix() const { return matrix_; }
  void set_group(GroupData g) { group_ = std::move(g); }
  void set_matrix(MatrixData m) { matrix_ = std::move(m); }

  /// Deterministic digest of the structure constants (name excluded).
  std::uint64_t content_hash() const;

 private:
  std::string name_;
  std::vector<std::string> basis_names_;
  SparseVector unit_;
  std::vector<SparseVector> table_;
  std::vector<SparseVector> brackets_;
  bool commutative_ = true;
  std::optional<GroupData> group_;
  std::optional<MatrixData> matrix_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraElement multiply(const Algebra& a, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement bracket(const Algebra& a, const AlgebraElement& x, const AlgebraElement& y);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  /// Index triples (i, j, k) where (e_i e_j) e_k != e_i (e_j e_k).
  std::vector<std::array<std::size_t, 3>> associativity_failures;
  std::vector<std::size_t> unit_failures;
};

ValidationReport validate_algebra(const Algebra& a, std::size_t max_failures = 16);

/// Catalogue: rationals, dual, truncated_poly m, split m, cyclic n (group C_n), s3 (group S_3), trivial (group).
AlgebraPtr builtin_algebra(const std::string& name, const std::vector<int>& params = {});
/// Names and parameter hints for `algebra list`.
std::vector<std::pair<std::string, std::string>> builtin_catalogue();
/// Resolves "dual", "truncated_poly:3", "split:2", "cyclic:3", "s3", "matrix:2:dual", ...
AlgebraPtr algebra_from_spec(const std::string& spec);

/// Group algebra of a Cayley table; checks closure, associativity, identity and inverses.
AlgebraPtr group_algebra(const std::vector<std::vector<int>>& cayley, const std::string& name = "group",
                         std::vector<std::string> element_names = {});
/// M_N(A) with basis ordered lexicographically by (i, j, algebra basis index).
AlgebraPtr matrix_algebra(const AlgebraPtr& base, int n, std::size_t max_dim = 4096);

struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  SparseMatrix matrix;  // target.dim x source.dim
  std::string name;
  AlgebraElement apply(const AlgebraElement& x) const { return matrix.apply(x); }
};

struct MorphismReport {
  bool multiplicative = true;
  bool unital = true;
  bool surjective = false;
  bool injective = false;
  std::size_t kernel_dim = 0;
  /// Least m with K^m = 0 (0 for the zero kernel); nullopt if K is not nilpotent.
  std::optional<std::size_t> nilpotency_degree;
  std::vector<std::string> failures;
  bool ok() const { return multiplicative && unital; }
};

MorphismReport validate_morphism(const AlgebraMorphism& f);

AlgebraMorphism identity_morphism(const AlgebraPtr& a);
/// Entrywise extension M_N(f): M_N(A) -> M_N(B).
AlgebraMorphism matrix_morphism(const AlgebraMorphism& f, const AlgebraPtr& source_matrix,
                                const AlgebraPtr& target_matrix);
/// Catalogue: "augmentation:m" (Q[x]/(x^m) -> Q), "dual_augmentation", "split_projection" (Q^2 -> Q), "identity:<alg>".
AlgebraMorphism builtin_morphism(const std::string& spec);

}  // namespace lhh
