#pragma once

#include "lhh/algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace lhh {

/// Malformed algebra or morphism file (as opposed to a well-formed but invalid algebra).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Algebra file:
//   {"name": ..., "dim": d, "basis": [names], "unit": ["p/q", ...],
//    "table": [[i, j, [[k, "p/q"], ...]], ...]}
// Omitted table entries are zero.
nlohmann::ordered_json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const nlohmann::json& j);
AlgebraPtr load_algebra_file(const std::filesystem::path& path);
void save_algebra_file(const Algebra& a, const std::filesystem::path& path);

/// A built-in spec such as "dual" or "matrix:2:rationals", otherwise a path to an algebra file.
AlgebraPtr resolve_algebra(const std::string& spec_or_path);

// Morphism file: {"source": <spec|path|object>, "target": <...>, "matrix": [["p/q", ...], ...]}
// with target.dim rows and source.dim columns.
AlgebraMorphism morphism_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
AlgebraMorphism load_morphism_file(const std::filesystem::path& path);
nlohmann::ordered_json morphism_to_json(const AlgebraMorphism& f);

}  // namespace lhh
