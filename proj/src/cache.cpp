#include "lhh/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

namespace lhh {

MatrixCache::MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<std::filesystem::path> MatrixCache::env_directory() {
  const char* v = std::getenv("LHH_CACHE_DIR");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

std::filesystem::path MatrixCache::file_for(std::uint64_t algebra_hash, const std::string& kind, int degree) const {
  return dir_ / (hex64(algebra_hash) + "_" + kind + "_" + std::to_string(degree) + ".txt");
}

std::optional<SparseMatrix> MatrixCache::load(std::uint64_t algebra_hash, const std::string& kind, int degree) {
  std::ifstream in(file_for(algebra_hash, kind, degree));
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  try {
    auto m = read_triples(in);
    ++hits_;
    return m;
  } catch (const std::exception&) {
    ++misses_;
    return std::nullopt;
  }
}

void MatrixCache::store(std::uint64_t algebra_hash, const std::string& kind, int degree, const SparseMatrix& m) {
  const auto target = file_for(algebra_hash, kind, degree);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    write_triples(out, m);
  }
  std::filesystem::rename(tmp, target);
}

void write_triples(std::ostream& os, const SparseMatrix& m) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, const Rational*>> entries;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) entries.emplace_back(e.index, static_cast<std::uint32_t>(j), &e.value);
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  os << "# " << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& [r, c, v] : entries) os << r << ' ' << c << ' ' << to_string(*v) << '\n';
}

SparseMatrix read_triples(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.size() < 2 || line[0] != '#') throw std::runtime_error("cache: missing header");
  std::istringstream hs(line.substr(1));
  std::size_t rows = 0, cols = 0;
  if (!(hs >> rows >> cols)) throw std::runtime_error("cache: bad header");
  std::vector<std::vector<SparseEntry>> columns(cols);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t r = 0, c = 0;
    std::string v;
    if (!(ls >> r >> c >> v) || r >= rows || c >= cols) throw std::runtime_error("cache: bad entry");
    columns[c].push_back({static_cast<std::uint32_t>(r), parse_rational(v)});
  }
  SparseMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) m.set_column(c, std::move(columns[c]));
  return m;
}

}  // namespace lhh
