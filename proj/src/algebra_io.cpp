#include "lhh/algebra_io.hpp"

#include <fstream>

namespace lhh {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json algebra_to_json(const Algebra& a) {
  ordered_json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  json unit = json::array();
  for (std::size_t k = 0; k < a.dim(); ++k) unit.push_back(to_string(coefficient(a.unit(), k)));
  j["unit"] = unit;
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const auto& p = a.product(i, k);
      if (p.empty()) continue;
      ordered_json terms = ordered_json::array();
      for (const auto& e : p) terms.push_back(ordered_json::array({e.index, to_string(e.value)}));
      table.push_back(ordered_json::array({i, k, terms}));
    }
  j["table"] = table;
  return j;
}

namespace {

Rational rational_field(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw FormatError(where + ": expected a rational string \"p/q\"");
}

std::size_t index_field(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer() || v.get<long>() < 0 || static_cast<std::size_t>(v.get<long>()) >= bound)
    throw FormatError(where + ": index out of range");
  return static_cast<std::size_t>(v.get<long>());
}

}  // namespace

AlgebraPtr algebra_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("algebra: expected a JSON object");
  for (const char* key : {"dim", "basis", "unit", "table"})
    if (!j.contains(key)) throw FormatError(std::string("algebra: missing key '") + key + "'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() <= 0) throw FormatError("algebra: dim must be positive");
  const std::size_t d = j["dim"].get<std::size_t>();
  if (!j["basis"].is_array() || j["basis"].size() != d) throw FormatError("algebra: basis must list dim names");
  std::vector<std::string> names;
  for (const auto& n : j["basis"]) {
    if (!n.is_string()) throw FormatError("algebra: basis names must be strings");
    names.push_back(n.get<std::string>());
  }
  if (!j["unit"].is_array() || j["unit"].size() != d) throw FormatError("algebra: unit must have dim coordinates");
  SparseVector unit;
  for (std::size_t k = 0; k < d; ++k) {
    Rational r = rational_field(j["unit"][k], "algebra unit");
    if (r != 0) unit.push_back({static_cast<std::uint32_t>(k), r});
  }
  if (!j["table"].is_array()) throw FormatError("algebra: table must be an array");
  std::vector<VectorAccumulator> acc(d * d);
  std::vector<char> seen(d * d, 0);
  for (const auto& entry : j["table"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array())
      throw FormatError("algebra: table entries must be [i, j, [[k, \"p/q\"], ...]]");
    std::size_t a = index_field(entry[0], d, "table i");
    std::size_t b = index_field(entry[1], d, "table j");
    if (seen[a * d + b]) throw FormatError("algebra: duplicate table entry for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    seen[a * d + b] = 1;
    for (const auto& term : entry[2]) {
      if (!term.is_array() || term.size() != 2) throw FormatError("algebra: table terms must be [k, \"p/q\"]");
      acc[a * d + b].add(static_cast<std::uint32_t>(index_field(term[0], d, "table k")), rational_field(term[1], "table value"));
    }
  }
  std::vector<SparseVector> table(d * d);
  for (std::size_t k = 0; k < d * d; ++k) table[k] = acc[k].finish();
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "unnamed";
  return std::make_shared<Algebra>(name, std::move(names), std::move(unit), std::move(table));
}

namespace {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

AlgebraPtr load_algebra_file(const std::filesystem::path& path) { return algebra_from_json(read_json_file(path)); }

void save_algebra_file(const Algebra& a, const std::filesystem::path& path) {
  std::ofstream out(path);
  out << algebra_to_json(a).dump(2) << "\n";
}

AlgebraPtr resolve_algebra(const std::string& spec_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec_or_path, ec)) return load_algebra_file(spec_or_path);
  return algebra_from_spec(spec_or_path);
}

namespace {

AlgebraPtr resolve_endpoint(const json& v, const std::filesystem::path& base_dir) {
  if (v.is_object()) return algebra_from_json(v);
  if (!v.is_string()) throw FormatError("morphism: source/target must be a name, path or algebra object");
  auto s = v.get<std::string>();
  std::error_code ec;
  if (!base_dir.empty() && std::filesystem::is_regular_file(base_dir / s, ec)) return load_algebra_file(base_dir / s);
  return resolve_algebra(s);
}

}  // namespace

AlgebraMorphism morphism_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("matrix"))
    throw FormatError("morphism: expected {source, target, matrix}");
  AlgebraMorphism f;
  f.source = resolve_endpoint(j["source"], base_dir);
  f.target = resolve_endpoint(j["target"], base_dir);
  f.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                       : f.source->name() + "->" + f.target->name();
  const auto& m = j["matrix"];
  if (!m.is_array() || m.size() != f.target->dim()) throw FormatError("morphism: matrix must have target.dim rows");
  f.matrix = SparseMatrix(f.target->dim(), f.source->dim());
  std::vector<VectorAccumulator> cols(f.source->dim());
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (!m[r].is_array() || m[r].size() != f.source->dim()) throw FormatError("morphism: matrix rows must have source.dim entries");
    for (std::size_t c = 0; c < m[r].size(); ++c)
      cols[c].add(static_cast<std::uint32_t>(r), rational_field(m[r][c], "morphism matrix"));
  }
  for (std::size_t c = 0; c < cols.size(); ++c) f.matrix.set_column(c, cols[c].finish());
  return f;
}

AlgebraMorphism load_morphism_file(const std::filesystem::path& path) {
  return morphism_from_json(read_json_file(path), path.parent_path());
}

ordered_json morphism_to_json(const AlgebraMorphism& f) {
  ordered_json j;
  j["name"] = f.name;
  j["source"] = algebra_to_json(*f.source);
  j["target"] = algebra_to_json(*f.target);
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < f.matrix.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < f.matrix.cols(); ++c) row.push_back(to_string(f.matrix.at(r, c)));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

}  // namespace lhh
