#pragma once

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lhh {

class MatrixCache;

enum class CheckStatus { Pass, Fail, Skipped };
std::string check_status_name(CheckStatus s);

struct CheckRecord {
  std::string id;       // what is checked, e.g. "chain_map:PHI"
  std::string subject;  // on what, e.g. "dual"
  CheckStatus status = CheckStatus::Pass;
  /// Witness for failures, reason for skips, tested range for passes.
  std::string detail;
  /// Observed values (betti rows, ranks, ...); deterministic content only.
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct SuiteConfig {
  /// Algebra specs; empty selects each suite's default catalogue.
  std::vector<std::string> algebras;
  int cutoff = 4;
  int N = 3;
  std::uint64_t seed = 42;
  std::size_t max_dim = 100000;
  /// Use a deliberately sign-broken antisymmetrization (exercises failure reporting).
  bool break_phi = false;
  MatrixCache* cache = nullptr;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  /// Some check could not run at its smallest meaningful size within max_dim.
  bool resource_bound = false;
  /// Wall time; kept out of the report body so reports stay byte-stable.
  double seconds = 0;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
};

/// core, degree0, commutative, matrices, groupring, relative, primitive.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument on an unknown suite name or an invalid config (cutoff < 2, N < 2).
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);
std::vector<std::string> default_algebras(const std::string& suite);

SuiteReport suite_core(const SuiteConfig& config);
SuiteReport suite_degree0(const SuiteConfig& config);
SuiteReport suite_commutative(const SuiteConfig& config);
SuiteReport suite_matrices(const SuiteConfig& config);
SuiteReport suite_groupring(const SuiteConfig& config);
SuiteReport suite_relative(const SuiteConfig& config);
SuiteReport suite_primitive(const SuiteConfig& config);

}  // namespace lhh
