#include "lhh/report.hpp"

#include "lhh/rational.hpp"

#include <gmp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lhh {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

/// Keeps table cells on one line.
std::string cell(std::string s) {
  for (auto& ch : s)
    if (ch == '|' || ch == '\n') ch = ' ';
  return s;
}

}  // namespace

std::string environment_hash() {
  std::ostringstream os;
  os << "lhh " << kVersion << "; gmp " << gmp_version << "; ";
#if defined(__VERSION__)
  os << __VERSION__;
#endif
  os << "; c++ " << __cplusplus;
  return hex64(stable_hash(os.str()));
}

json suite_report_json(const SuiteReport& r, const SuiteConfig& cfg) {
  json j;
  j["schema"] = "lhh.verify/1";
  j["suite"] = r.suite;
  json algebras = json::array();
  for (const auto& a : cfg.algebras.empty() ? default_algebras(r.suite) : cfg.algebras) algebras.push_back(a);
  j["config"] = {{"algebras", algebras},     {"cutoff", cfg.cutoff},       {"matrix_size", cfg.N},
                 {"seed", cfg.seed},         {"max_dim", cfg.max_dim},     {"debug_break_phi", cfg.break_phi}};
  j["environment_hash"] = environment_hash();
  j["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                  {"fail", r.count(CheckStatus::Fail)},
                  {"skipped", r.count(CheckStatus::Skipped)},
                  {"resource_bound", r.resource_bound},
                  {"ok", r.ok()}};
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["id"] = c.id;
    e["subject"] = c.subject;
    e["status"] = check_status_name(c.status);
    e["detail"] = c.detail;
    e["data"] = c.data;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string suite_report_markdown(const SuiteReport& r, const SuiteConfig& cfg) {
  std::ostringstream os;
  os << "# Suite `" << r.suite << "`\n\n";
  os << "cutoff " << cfg.cutoff << ", matrix size " << cfg.N << ", seed " << cfg.seed << ", basis bound "
     << cfg.max_dim << (cfg.break_phi ? ", sign-broken antisymmetrization" : "") << "\n\n";
  os << "**" << (r.ok() ? "PASS" : "FAIL") << "**: " << r.count(CheckStatus::Pass) << " passed, "
     << r.count(CheckStatus::Fail) << " failed, " << r.count(CheckStatus::Skipped) << " skipped";
  if (r.resource_bound) os << " (some checks hit the basis bound)";
  os << "\n\n| status | check | subject | detail |\n|---|---|---|---|\n";
  for (const auto& c : r.checks)
    os << "| " << check_status_name(c.status) << " | `" << cell(c.id) << "` | " << cell(c.subject) << " | "
       << cell(c.detail) << " |\n";
  return os.str();
}

std::string compute_report_markdown(const json& r) {
  std::ostringstream os;
  const auto& a = r.at("algebra");
  os << "# Homology of `" << a.at("name").get<std::string>() << "` (dim " << a.at("dim").get<std::size_t>()
     << ")\n\n";
  for (const auto& c : r.at("complexes")) {
    const int cutoff = c.at("cutoff").get<int>();
    os << "## " << c.at("kind").get<std::string>() << (c.at("weight_zero").get<bool>() ? " (weight 0)" : "")
       << "\n\n| degree |";
    for (int n = 0; n <= cutoff; ++n) os << " " << n << " |";
    os << "\n|---|";
    for (int n = 0; n <= cutoff; ++n) os << "---|";
    os << "\n| dim |";
    for (const auto& d : c.at("dims")) os << " " << d.dump() << " |";
    os << "\n| betti |";
    for (int n = 0; n <= cutoff; ++n) os << " " << c.at("betti")[n].dump() << (n == cutoff ? "*" : "") << " |";
    os << "\n\n\\* degree " << cutoff << " is boundary-incomplete: its value is the cycle dimension, an upper bound.\n\n";
  }
  for (const auto& m : r.at("maps")) {
    os << "## Map " << m.at("kind").get<std::string>() << ": " << m.at("source").at("kind").get<std::string>() << "("
       << m.at("source").at("algebra").get<std::string>() << ") -> " << m.at("target").at("kind").get<std::string>()
       << "(" << m.at("target").at("algebra").get<std::string>() << "), shift " << m.at("shift").dump() << "\n\n";
    os << "chain map: " << (m.at("chain_map").get<bool>() ? "yes" : "no");
    if (!m.at("witness").get<std::string>().empty()) os << " (" << m.at("witness").get<std::string>() << ")";
    os << "\n\n";
    if (m.contains("note")) os << m.at("note").get<std::string>() << "\n\n";
    if (!m.at("induced").empty()) {
      os << "| source degree | target degree | rank | source betti | target betti |\n|---|---|---|---|---|\n";
      for (const auto& e : m.at("induced"))
        os << "| " << e.at("source_degree").dump() << " | " << e.at("target_degree").dump() << " | "
           << e.at("rank").dump() << " | " << e.at("source_betti").dump() << " | " << e.at("target_betti").dump()
           << " |\n";
      os << "\n";
    }
  }
  return os.str();
}

json manifest_json(const RunManifest& m) {
  json j;
  j["schema"] = "lhh.manifest/1";
  j["command"] = m.command;
  j["config"] = m.config;
  json inputs = json::array();
  std::string fingerprint = m.command + "\n" + m.config.dump();
  for (const auto& [path, hash] : m.inputs) {
    inputs.push_back({{"path", path}, {"hash", hash}});
    fingerprint += "\n" + hash;
  }
  j["inputs"] = inputs;
  j["run_hash"] = hex64(stable_hash(fingerprint));
  j["environment_hash"] = environment_hash();
  j["cache"] = {{"directory", m.cache_directory}, {"hits", m.cache_hits}, {"misses", m.cache_misses}};
  j["wall_seconds"] = m.wall_seconds;
  j["outputs"] = m.outputs;
  j["exit_code"] = m.exit_code;
  return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << content;
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string file_hash(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return hex64(stable_hash(ss.str()));
}

}  // namespace lhh
