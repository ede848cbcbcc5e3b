#pragma once

#include "lhh/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace lhh {

/// Digest of library version, compiler and GMP version; identical builds give identical hashes.
std::string environment_hash();

/// Report body for one suite; contains no timing, so equal configs give equal bytes.
nlohmann::ordered_json suite_report_json(const SuiteReport& report, const SuiteConfig& config);
std::string suite_report_markdown(const SuiteReport& report, const SuiteConfig& config);

std::string compute_report_markdown(const nlohmann::ordered_json& compute_report);

/// Run bookkeeping kept apart from the reports: volatile fields (timing, cache counters) live here.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  /// (path, content hash) of every input file.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string cache_directory;
  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
  double wall_seconds = 0;
  std::vector<std::string> outputs;
  int exit_code = 0;
};
nlohmann::ordered_json manifest_json(const RunManifest& m);

/// Serialized JSON with two-space indentation and a trailing newline.
std::string dump_json(const nlohmann::ordered_json& j);
/// Writes through a temporary sibling file and a rename.
void write_file(const std::filesystem::path& path, const std::string& content);
/// Stable hash of a file's bytes (hex).
std::string file_hash(const std::filesystem::path& path);

}  // namespace lhh
