#pragma once

#include "lhh/linalg.hpp"
#include "lhh/sparse.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhh {

/// Bounded chain complex C_0 <- C_1 <- ... <- C_cutoff with exact rational boundaries.
///
/// Homology is trustworthy only through degree cutoff-1: degree `cutoff` has no
/// incoming boundary.
struct ChainComplex {
  std::string kind;
  int cutoff = 0;
  std::vector<std::size_t> dims;
  /// boundary[n] : C_n -> C_{n-1} for 1 <= n <= cutoff; boundary[0] is an empty placeholder.
  std::vector<SparseMatrix> boundary;
  /// Set for CL complexes restricted to the torus-weight-0 summand of gl_N(A).
  bool weight_zero = false;

  std::size_t dim(int n) const { return (n < 0 || n > cutoff) ? 0 : dims[n]; }
  /// Boundary out of degree n; a zero map when n is 0.
  const SparseMatrix& d(int n) const;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// Degree-wise matrices F_n : source_n -> target_{n - shift} with target.d F = sign * F source.d.
///
/// sign is -1 only for maps such as the cone projection that anticommute with the
/// boundaries; they still induce maps on homology.
struct ChainMapRep {
  std::string kind;
  ComplexPtr source;
  ComplexPtr target;
  int shift = 0;
  int sign = 1;
  /// maps[n] is defined for shift <= n <= last_degree().
  std::vector<std::optional<SparseMatrix>> maps;

  bool has(int n) const { return n >= 0 && n < static_cast<int>(maps.size()) && maps[n].has_value(); }
  const SparseMatrix& at(int n) const;
  int last_degree() const { return static_cast<int>(maps.size()) - 1; }
};

struct CheckResult {
  bool ok = true;
  std::string witness;
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

CheckResult verify_boundary_squares(const ChainComplex& c);
CheckResult verify_chain_map(const ChainMapRep& f);
/// Exact equality of two maps with the same source/target shapes in every common degree.
CheckResult same_chain_map(const ChainMapRep& a, const ChainMapRep& b);

/// G after F; shifts add.
ChainMapRep compose(const ChainMapRep& g, const ChainMapRep& f, std::string kind = {});
ChainMapRep identity_map(const ComplexPtr& c);
ChainMapRep zero_map(const ComplexPtr& source, const ComplexPtr& target);

class HomologySolver;

struct HomologyData {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<SparseVector> representatives;
  std::shared_ptr<const HomologySolver> solver;

  /// Coordinates of a cycle in the representative basis; throws std::domain_error if v is not a cycle.
  SparseVector coordinates(const SparseVector& v) const;
  /// True iff v is a boundary.
  bool is_boundary(const SparseVector& v) const;
};

/// Homology in degree n (requires n <= cutoff - 1).
HomologyData homology(const ChainComplex& c, int n);

struct BettiTable {
  std::vector<std::size_t> betti;   // per degree 0..cutoff (last entry is boundary-incomplete)
  std::vector<std::size_t> ranks;   // rank of boundary[n], ranks[0] = 0
  int valid_through = 0;            // cutoff - 1
};

/// Betti numbers from ranks only; `jobs` degrees are processed concurrently.
BettiTable betti_numbers(const ChainComplex& c, unsigned jobs = 1);

/// Matrix of F_* : H_n(source) -> H_{n-shift}(target) in representative bases.
SparseMatrix induced_map(const ChainMapRep& f, const HomologyData& source, const HomologyData& target);
SparseMatrix induced_map(const ChainMapRep& f, int n);

/// Rank of F_* on H_n(source) computed from ranks only:
/// rank [[d_src, 0], [F, d_tgt]] - rank d_src - rank d_tgt.
std::size_t induced_rank(const ChainMapRep& f, int n);

struct MappingCone {
  ComplexPtr cone;  // M_n = C_{n-1} (+) C'_n, boundary (c, c') -> (-dc, dc' + f c)
  ChainMapRep proj;  // M -> C, shift 1, anticommuting
  ChainMapRep incl;  // C' -> M
};

/// Cutoff is min(source cutoff + 1, target cutoff).
MappingCone mapping_cone(const ChainMapRep& f);

/// The chain map induced between cones by a commuting square (F on sources, G on targets).
ChainMapRep cone_map(const MappingCone& from, const MappingCone& to, const ChainMapRep& on_source,
                     const ChainMapRep& on_target, std::string kind = {});

struct ExactnessNode {
  std::string label;
  bool composite_zero = true;
  bool ranks_match = true;
  std::size_t incoming_rank = 0;
  std::size_t outgoing_nullity = 0;
  bool ok() const { return composite_zero && ranks_match; }
};

struct ExactnessReport {
  std::vector<ExactnessNode> nodes;
  bool ok() const;
};

/// maps[k] : V_k -> V_{k+1}; checks exactness at V_1 ... V_{len-1}. Throws on shape mismatch.
ExactnessReport exactness_check(const std::vector<SparseMatrix>& maps, const std::vector<std::string>& node_labels = {});

struct LongExactSequence {
  std::vector<SparseMatrix> maps;
  std::vector<std::string> labels;  // node labels, one more than maps
};

/// ... -> H_m(C) -f-> H_m(C') -a-> H_m(M) -p-> H_{m-1}(C) -> ... -> H_0(M) -> 0 from degree `top` down.
LongExactSequence cone_long_exact_sequence(const ChainMapRep& f, const MappingCone& cone, int top);

}  // namespace lhh
