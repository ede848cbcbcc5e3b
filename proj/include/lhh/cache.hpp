#pragma once

#include "lhh/sparse.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace lhh {

/// On-disk store of boundary and map matrices.
///
/// One file per (algebra hash, kind, degree); each line is `row col p/q`, sorted
/// by (row, col), after a `# rows cols` header. Writes go through a temporary
/// file and a rename so concurrent readers never see partial files.
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir);

  /// Directory from LHH_CACHE_DIR, or nullopt when unset or empty.
  static std::optional<std::filesystem::path> env_directory();

  std::optional<SparseMatrix> load(std::uint64_t algebra_hash, const std::string& kind, int degree);
  void store(std::uint64_t algebra_hash, const std::string& kind, int degree, const SparseMatrix& m);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path file_for(std::uint64_t algebra_hash, const std::string& kind, int degree) const;

  std::filesystem::path dir_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

void write_triples(std::ostream& os, const SparseMatrix& m);
SparseMatrix read_triples(std::istream& is);

}  // namespace lhh
