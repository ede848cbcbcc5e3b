#pragma once

#include "lhh/algebra.hpp"
#include "lhh/chain_complex.hpp"
#include "lhh/permutation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhh {

class MatrixCache;

enum class ComplexKind { CL, CHH, CLAMBDA, CE, CE_ADJ, BAR, L, P };

std::string complex_kind_name(ComplexKind k);
std::optional<ComplexKind> parse_complex_kind(const std::string& name);
std::vector<ComplexKind> all_complex_kinds();

struct BuildOptions {
  int cutoff = 4;
  /// Largest admissible basis size in any degree.
  std::size_t max_dim = 100000;
  /// CL of a matrix algebra only: restrict to the torus-weight-0 summand.
  bool weight_zero = false;
  MatrixCache* cache = nullptr;
};

/// A degree whose basis would exceed BuildOptions::max_dim.
class ResourceBoundExceeded : public std::runtime_error {
 public:
  ResourceBoundExceeded(std::string kind, int degree, std::uint64_t dim, std::size_t bound);
  const std::string& kind() const { return kind_; }
  int degree() const { return degree_; }
  std::uint64_t dim() const { return dim_; }

 private:
  std::string kind_;
  int degree_;
  std::uint64_t dim_;
};

/// Dimension of degree n without building anything (saturates at UINT64_MAX).
std::uint64_t complex_dimension(ComplexKind kind, const Algebra& a, int n, bool weight_zero = false);

/// CL_n = A^{(x) n}, degree 0 the scalar line; d is the bracket-insertion boundary.
ComplexPtr build_CL(const Algebra& a, const BuildOptions& opts);
/// CHH_n = A^{(x)(n+1)} with b = sum (-1)^i d_i, the last face wrapping.
ComplexPtr build_CHH(const Algebra& a, const BuildOptions& opts);
/// Connes complex: CHH_n / (1 - t) on orbit representatives.
ComplexPtr build_Clambda(const Algebra& a, const BuildOptions& opts);
/// Chevalley-Eilenberg complex Lambda^n(A), degree 0 the scalar line.
ComplexPtr build_CE(const Algebra& a, const BuildOptions& opts);
/// Adjoint-coefficient Chevalley-Eilenberg complex A (x) Lambda^n(A).
ComplexPtr build_CE_adjoint(const Algebra& a, const BuildOptions& opts);
/// Bar complex k[G^n] of the group underlying a group algebra.
ComplexPtr build_bar(const Algebra& group_algebra, const BuildOptions& opts);
/// L_n = k[S_n] (x) A^{(x) n} with the transported Leibniz boundary.
ComplexPtr build_L(const Algebra& a, const BuildOptions& opts);
/// P_n = k[U_{n+1}] (x) A^{(x)(n+1)}, the restriction of L_{n+1}.
ComplexPtr build_P(const Algebra& a, const BuildOptions& opts);

ComplexPtr build_complex(ComplexKind kind, const Algebra& a, const BuildOptions& opts);

/// Basis labels of degree n, one per basis element, in matrix order.
std::vector<std::string> basis_labels(ComplexKind kind, const Algebra& a, int n, bool weight_zero = false);

/// Basis indices of the L and P complexes.
std::size_t L_index(const Permutation& sigma, std::uint64_t tensor_code, std::size_t d);
std::size_t P_index(const std::vector<Permutation>& cycles, const Permutation& sigma, std::uint64_t tensor_code,
                    std::size_t d);

/// Change of basis on P_n from cycle coordinates to the slot basis.
///
/// Cycle coordinate (sigma, c_0..c_n) is eps(sigma) sigma (x) a with a in slot
/// sigma^k(0) equal to c_k, where eps(sigma) is the sign of k -> sigma^k(0).
SparseMatrix P_cycle_coordinates(const Algebra& a, int n);
/// Boundary P_n -> P_{n-1} in cycle coordinates: sum (-1)^k d_k(sigma) (x) d_k(c), d_k Hochschild faces.
SparseMatrix P_diagonal_boundary(const Algebra& a, int n);

}  // namespace lhh
