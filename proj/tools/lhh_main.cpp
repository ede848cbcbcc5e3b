#include "lhh/algebra.hpp"
#include "lhh/algebra_io.hpp"
#include "lhh/cache.hpp"
#include "lhh/compute.hpp"
#include "lhh/report.hpp"
#include "lhh/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResourceBound = 3 };

/// Raised for user errors that CLI11 cannot see (unknown kinds, unreadable inputs).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_element(const lhh::Algebra& a, const lhh::AlgebraElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : x) {
    std::string c = e.value.get_str();
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (c != "1") os << c << "*";
    os << a.basis_names()[e.index];
    first = false;
  }
  return os.str();
}

std::unique_ptr<lhh::MatrixCache> open_cache(const std::string& flag) {
  if (!flag.empty()) return std::make_unique<lhh::MatrixCache>(flag);
  if (auto dir = lhh::MatrixCache::env_directory()) return std::make_unique<lhh::MatrixCache>(*dir);
  return nullptr;
}

/// Input files named on the command line, hashed for the manifest.
std::vector<std::pair<std::string, std::string>> hashed_inputs(const std::vector<std::string>& specs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : specs) {
    std::error_code ec;
    if (fs::is_regular_file(s, ec)) out.emplace_back(s, lhh::file_hash(s));
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- algebra ----

int algebra_list() {
  for (const auto& [name, hint] : lhh::builtin_catalogue()) std::cout << name << "\t" << hint << "\n";
  std::cout << "\nmorphisms: augmentation:m, dual_augmentation, split_projection, identity:<algebra>\n";
  return kOk;
}

int algebra_validate(const std::string& path, bool morphism) {
  if (morphism) {
    auto f = lhh::load_morphism_file(path);
    auto rep = lhh::validate_morphism(f);
    std::cout << "morphism " << f.source->name() << " -> " << f.target->name() << "\n";
    for (const auto& msg : rep.failures) std::cout << "  " << msg << "\n";
    if (!rep.ok()) {
      std::cout << "invalid\n";
      return kVerificationFailed;
    }
    std::cout << "kernel dim " << rep.kernel_dim << ", surjective " << (rep.surjective ? "yes" : "no") << ", ";
    if (rep.nilpotency_degree)
      std::cout << "nilpotent kernel of degree " << *rep.nilpotency_degree << "\n";
    else
      std::cout << "kernel not nilpotent\n";
    std::cout << "valid\n";
    return kOk;
  }
  auto a = lhh::load_algebra_file(path);
  auto rep = lhh::validate_algebra(*a);
  std::cout << "algebra " << a->name() << " (dim " << a->dim() << ")\n";
  const auto& names = a->basis_names();
  for (const auto& t : rep.associativity_failures)
    std::cout << "  associativity fails on (" << names[t[0]] << ", " << names[t[1]] << ", " << names[t[2]]
              << ") = indices (" << t[0] << ", " << t[1] << ", " << t[2] << ")\n";
  for (auto i : rep.unit_failures) std::cout << "  unit law fails on " << names[i] << "\n";
  if (!rep.ok) {
    std::cout << "invalid\n";
    return kVerificationFailed;
  }
  std::cout << "valid\n";
  return kOk;
}

int algebra_inspect(const std::string& spec, bool as_json) {
  auto a = lhh::resolve_algebra(spec);
  if (as_json) {
    std::cout << lhh::dump_json(lhh::algebra_to_json(*a));
    return kOk;
  }
  std::cout << "name: " << a->name() << "\n"
            << "dim: " << a->dim() << "\n"
            << "basis: {";
  for (std::size_t i = 0; i < a->dim(); ++i) std::cout << (i ? ", " : "") << a->basis_names()[i];
  std::cout << "}\n"
            << "unit: " << format_element(*a, a->unit()) << "\n"
            << "commutative: " << (a->is_commutative() ? "yes" : "no") << "\n"
            << "content hash: " << lhh::hex64(a->content_hash()) << "\n";
  if (a->group()) std::cout << "group algebra of order " << a->dim() << "\n";
  if (a->matrix()) std::cout << "matrix algebra M_" << a->matrix()->size << "(" << a->matrix()->base->name() << ")\n";
  constexpr std::size_t kTableLimit = 12;
  if (a->dim() <= kTableLimit) {
    std::cout << "products:\n";
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j)
        if (!a->product(i, j).empty())
          std::cout << "  " << a->basis_names()[i] << " * " << a->basis_names()[j] << " = "
                    << format_element(*a, a->product(i, j)) << "\n";
  }
  return kOk;
}

// ---- compute ----

struct ComputeFlags {
  std::string algebra;
  std::vector<std::string> complexes;
  std::vector<std::string> maps;
  int max_degree = 4;
  int matrix_size = 2;
  std::string out;
  std::string cache;
  std::size_t max_dim = 100000;
  bool weight_zero = false;
  unsigned jobs = 1;
};

int run_compute_command(const ComputeFlags& fl, const std::string& command_line) {
  const auto t0 = std::chrono::steady_clock::now();
  lhh::ComputeRequest req;
  for (const auto& k : fl.complexes) {
    auto kind = lhh::parse_complex_kind(k);
    if (!kind) throw UsageError("unknown complex kind '" + k + "'");
    req.complexes.push_back(*kind);
  }
  for (const auto& k : fl.maps) {
    auto kind = lhh::parse_map_kind(k);
    if (!kind) throw UsageError("unknown map kind '" + k + "'");
    req.maps.push_back(*kind);
  }
  if (req.complexes.empty() && req.maps.empty()) throw UsageError("nothing to compute: pass --complex and/or --maps");
  req.algebra = lhh::resolve_algebra(fl.algebra);
  auto valid = lhh::validate_algebra(*req.algebra);
  if (!valid.ok) throw UsageError("algebra '" + fl.algebra + "' is invalid: " + valid.failures.front());
  req.max_degree = fl.max_degree;
  req.matrix_size = fl.matrix_size;
  req.max_dim = fl.max_dim;
  req.weight_zero = fl.weight_zero;
  req.jobs = std::max(1u, fl.jobs);
  auto cache = open_cache(fl.cache);
  req.cache = cache.get();

  lhh::RunManifest manifest;
  manifest.command = command_line;
  manifest.inputs = hashed_inputs({fl.algebra});
  if (cache) manifest.cache_directory = cache->directory().string();

  int code = kOk;
  json report;
  try {
    auto result = lhh::run_compute(req);
    report = std::move(result.report);
    if (!result.maps_verified) code = kVerificationFailed;
  } catch (const lhh::ResourceBoundExceeded& e) {
    std::cerr << "lhh: resource bound: " << e.kind() << " degree " << e.degree() << " has dimension " << e.dim()
              << " (bound " << fl.max_dim << "); lower --max-degree or raise --max-dim\n";
    return kResourceBound;
  }
  manifest.config = report.at("config");
  const std::string md = lhh::compute_report_markdown(report);
  if (fl.out.empty()) {
    std::cout << md;
  } else {
    fs::path json_path = fl.out;
    fs::path md_path = json_path;
    md_path.replace_extension(".md");
    fs::path manifest_path = json_path;
    manifest_path.replace_extension(".manifest.json");
    lhh::write_file(json_path, lhh::dump_json(report));
    lhh::write_file(md_path, md);
    manifest.outputs = {json_path.string(), md_path.string()};
    if (cache) {
      manifest.cache_hits = cache->hits();
      manifest.cache_misses = cache->misses();
    }
    manifest.wall_seconds = seconds_since(t0);
    manifest.exit_code = code;
    lhh::write_file(manifest_path, lhh::dump_json(lhh::manifest_json(manifest)));
    std::cout << "wrote " << json_path.string() << ", " << md_path.string() << ", " << manifest_path.string() << "\n";
  }
  for (const auto& m : report.at("maps"))
    if (!m.at("chain_map").get<bool>() && !m.contains("note"))
      std::cerr << "lhh: " << m.at("kind").get<std::string>() << " is not a chain map: "
                << m.at("witness").get<std::string>() << "\n";
  return code;
}

// ---- verify ----

struct VerifyFlags {
  std::string suite = "all";
  int cutoff = 4;
  int matrix_size = 3;
  std::uint64_t seed = 42;
  std::string out = "lhh-verify";
  std::vector<std::string> algebras;
  std::size_t max_dim = 100000;
  bool break_phi = false;
  std::string cache;
};

int run_verify_command(const VerifyFlags& fl, const std::string& command_line) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> suites;
  if (fl.suite == "all") {
    suites = lhh::suite_names();
  } else {
    const auto known = lhh::suite_names();
    if (std::find(known.begin(), known.end(), fl.suite) == known.end()) {
      std::string list;
      for (const auto& s : known) list += " " + s;
      throw UsageError("unknown suite '" + fl.suite + "'; expected all or one of:" + list);
    }
    suites = {fl.suite};
  }
  if (fl.cutoff < 2) throw UsageError("--cutoff must be at least 2");
  if (fl.matrix_size < 2) throw UsageError("--matrix-size must be at least 2");
  for (const auto& a : fl.algebras) lhh::resolve_algebra(a);

  auto cache = open_cache(fl.cache);
  lhh::SuiteConfig cfg;
  cfg.algebras = fl.algebras;
  cfg.cutoff = fl.cutoff;
  cfg.N = fl.matrix_size;
  cfg.seed = fl.seed;
  cfg.max_dim = fl.max_dim;
  cfg.break_phi = fl.break_phi;
  cfg.cache = cache.get();

  lhh::RunManifest manifest;
  manifest.command = command_line;
  manifest.inputs = hashed_inputs(fl.algebras);
  manifest.config = {{"suites", suites},  {"cutoff", fl.cutoff},   {"matrix_size", fl.matrix_size},
                     {"seed", fl.seed},   {"max_dim", fl.max_dim}, {"debug_break_phi", fl.break_phi},
                     {"algebras", fl.algebras}};
  if (cache) manifest.cache_directory = cache->directory().string();

  const fs::path dir = fl.out;
  bool failed = false;
  bool bounded = false;
  json timings = json::object();
  for (const auto& name : suites) {
    auto rep = lhh::run_suite(name, cfg);
    const fs::path jp = dir / (name + ".json");
    const fs::path mp = dir / (name + ".md");
    lhh::write_file(jp, lhh::dump_json(lhh::suite_report_json(rep, cfg)));
    lhh::write_file(mp, lhh::suite_report_markdown(rep, cfg));
    manifest.outputs.push_back(jp.string());
    manifest.outputs.push_back(mp.string());
    timings[name] = rep.seconds;
    std::cout << name << ": " << (rep.ok() ? "PASS" : "FAIL") << " (" << rep.count(lhh::CheckStatus::Pass)
              << " passed, " << rep.count(lhh::CheckStatus::Fail) << " failed, "
              << rep.count(lhh::CheckStatus::Skipped) << " skipped" << (rep.resource_bound ? ", basis bound hit" : "")
              << ") in " << std::fixed << std::setprecision(1) << rep.seconds << " s\n";
    std::cout.unsetf(std::ios::floatfield);
    for (const auto& c : rep.checks)
      if (c.status == lhh::CheckStatus::Fail)
        std::cout << "  FAIL " << c.id << " [" << c.subject << "]: " << c.detail << "\n";
    failed |= !rep.ok();
    bounded |= rep.resource_bound;
  }
  const int code = failed ? kVerificationFailed : bounded ? kResourceBound : kOk;
  if (cache) {
    manifest.cache_hits = cache->hits();
    manifest.cache_misses = cache->misses();
  }
  manifest.wall_seconds = seconds_since(t0);
  manifest.exit_code = code;
  json mj = lhh::manifest_json(manifest);
  mj["suite_seconds"] = timings;
  lhh::write_file(dir / "manifest.json", lhh::dump_json(mj));
  std::cout << "reports in " << dir.string() << "\n";
  return code;
}

std::string join_args(int argc, char** argv) {
  std::string s = "lhh";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Leibniz, Hochschild and cyclic homology of finite-dimensional algebras over Q"};
  app.require_subcommand(1);

  auto* alg = app.add_subcommand("algebra", "List, validate or inspect algebras");
  alg->require_subcommand(1);
  alg->add_subcommand("list", "Print the built-in catalogue");
  std::string validate_path;
  bool validate_morphism = false;
  auto* validate = alg->add_subcommand("validate", "Check an algebra (or morphism) file");
  validate->add_option("file", validate_path, "JSON file")->required();
  validate->add_flag("--morphism", validate_morphism, "Treat the file as a morphism");
  std::string inspect_spec;
  bool inspect_json = false;
  auto* inspect = alg->add_subcommand("inspect", "Show dimension, basis, unit and products");
  inspect->add_option("algebra", inspect_spec, "Built-in name or file")->required();
  inspect->add_flag("--json", inspect_json, "Print the algebra in file format");

  ComputeFlags cf;
  auto* comp = app.add_subcommand("compute", "Betti numbers of complexes and ranks of induced maps");
  comp->add_option("--algebra", cf.algebra, "Built-in name or algebra file")->required();
  comp->add_option("--complex", cf.complexes, "CL, CHH, CLAMBDA, CE, CE_ADJ, BAR, L, P")->delimiter(',');
  comp->add_option("--maps", cf.maps, "Map kinds, e.g. PHI,THETA,TRACE")->delimiter(',');
  comp->add_option("--max-degree", cf.max_degree, "Degree cutoff; the top degree is boundary-incomplete")
      ->check(CLI::Range(1, 64));
  comp->add_option("--matrix-size", cf.matrix_size, "N for maps involving M_N(A)")->check(CLI::Range(1, 64));
  comp->add_option("--out", cf.out, "JSON report path; markdown and manifest are written beside it");
  comp->add_option("--cache", cf.cache, "Matrix cache directory (default: $LHH_CACHE_DIR)");
  comp->add_option("--max-dim", cf.max_dim, "Largest basis allowed in one degree")->check(CLI::PositiveNumber);
  comp->add_flag("--weight-zero", cf.weight_zero, "Restrict CL of a matrix algebra to its weight-zero summand");
  comp->add_option("--jobs", cf.jobs, "Degrees processed concurrently")->check(CLI::Range(1, 256));

  VerifyFlags vf;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", vf.suite, "Suite id or all");
  ver->add_option("--cutoff", vf.cutoff, "Degree cutoff");
  ver->add_option("--matrix-size", vf.matrix_size, "N for gl_N checks");
  ver->add_option("--seed", vf.seed, "Seed for sampled checks");
  ver->add_option("--out", vf.out, "Report directory");
  ver->add_option("--algebras", vf.algebras, "Override the suite's algebras")->delimiter(',');
  ver->add_option("--max-dim", vf.max_dim, "Largest basis allowed in one degree")->check(CLI::PositiveNumber);
  ver->add_flag("--debug-break-phi", vf.break_phi, "Flip a sign in the antisymmetrization (must fail)");
  ver->add_option("--cache", vf.cache, "Matrix cache directory (default: $LHH_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command_line = join_args(argc, argv);
  try {
    if (alg->parsed()) {
      if (validate->parsed()) return algebra_validate(validate_path, validate_morphism);
      if (inspect->parsed()) return algebra_inspect(inspect_spec, inspect_json);
      return algebra_list();
    }
    if (comp->parsed()) return run_compute_command(cf, command_line);
    return run_verify_command(vf, command_line);
  } catch (const UsageError& e) {
    std::cerr << "lhh: " << e.what() << "\n";
  } catch (const lhh::FormatError& e) {
    std::cerr << "lhh: malformed input: " << e.what() << "\n";
  } catch (const lhh::AlgebraError& e) {
    std::cerr << "lhh: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "lhh: malformed JSON: " << e.what() << "\n";
  } catch (const lhh::ResourceBoundExceeded& e) {
    std::cerr << "lhh: resource bound: " << e.what() << "\n";
    return kResourceBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lhh: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "lhh: error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}
