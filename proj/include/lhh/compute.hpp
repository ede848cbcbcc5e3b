#pragma once

#include "lhh/algebra.hpp"
#include "lhh/chain_maps.hpp"
#include "lhh/complexes.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lhh {

struct ComputeRequest {
  AlgebraPtr algebra;
  std::vector<ComplexKind> complexes;
  std::vector<MapKind> maps;
  int max_degree = 4;
  /// Matrix size for TRACE, CORNER, LIFT_P and THETA_NF.
  int matrix_size = 2;
  std::size_t max_dim = 100000;
  /// CL of a matrix algebra only.
  bool weight_zero = false;
  unsigned jobs = 1;
  MatrixCache* cache = nullptr;
};

struct ComputeResult {
  nlohmann::ordered_json report;
  /// Every requested chain map passed verify_chain_map (LIFT_P is exempt: it is not a chain map).
  bool maps_verified = true;
};

/// Source and target complex kinds of a map kind, and its degree shift.
struct MapSignature {
  std::string source;
  std::string target;
  int shift;
  /// Which side lives over M_N(A) rather than A.
  bool source_over_matrices;
  bool target_over_matrices;
};
MapSignature map_signature(MapKind k);

/// Builds the requested complexes and maps and tabulates betti numbers and induced ranks.
/// Throws ResourceBoundExceeded, AlgebraError or std::invalid_argument.
ComputeResult run_compute(const ComputeRequest& request);

}  // namespace lhh
