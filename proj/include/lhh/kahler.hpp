#pragma once

#include "lhh/algebra.hpp"
#include "lhh/chain_complex.hpp"
#include "lhh/linalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lhh {

/// Omega^n of a commutative algebra as a rational vector space.
///
/// Ambient space A (x) Lambda^n(A) (index head * C(d, n) + wedge index) modulo
/// c (d(e_i e_j) - e_i de_j - e_j de_i) ^ de_{k_2} ^ ... ^ de_{k_n}; linearity of d
/// is built into the ambient space. The quotient basis is the set of non-pivot
/// ambient coordinates of the reduced relation echelon.
struct KahlerModule {
  int degree = 0;
  std::size_t ambient = 0;
  std::shared_ptr<const Echelon> relations;
  std::vector<std::uint32_t> basis;      // ambient index of each quotient basis element
  std::vector<long> quotient_index;      // ambient index -> quotient index, -1 for pivots

  std::size_t dim() const { return basis.size(); }
  /// Quotient coordinates of an ambient vector.
  SparseVector reduce(const SparseVector& ambient_vector) const;
  /// The ambient vector representing a quotient basis element (a fixed linear section).
  SparseVector section(std::size_t index) const { return unit_vector(basis[index]); }
};

/// Omega^n_{A|Q}; throws AlgebraError if A is not commutative.
KahlerModule kahler_module(const Algebra& a, int n);

/// Omega^0 <- Omega^1 <- ... with zero boundaries (kind "OMEGA").
ComplexPtr build_Omega(const Algebra& a, int cutoff, std::vector<KahlerModule>* modules = nullptr);

std::vector<std::string> kahler_labels(const Algebra& a, const KahlerModule& m);

}  // namespace lhh
