#include "lhh/algebra.hpp"

#include "lhh/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lhh {

int MatrixData::row(std::size_t k) const { return static_cast<int>(k / base->dim()) / size; }
int MatrixData::col(std::size_t k) const { return static_cast<int>(k / base->dim()) % size; }
int MatrixData::entry(std::size_t k) const { return static_cast<int>(k % base->dim()); }
std::size_t MatrixData::index(int i, int j, int b) const {
  return (static_cast<std::size_t>(i) * size + j) * base->dim() + b;
}

Algebra::Algebra(std::string name, std::vector<std::string> basis_names, SparseVector unit,
                 std::vector<SparseVector> table)
    : name_(std::move(name)), basis_names_(std::move(basis_names)), unit_(std::move(unit)), table_(std::move(table)) {
  const std::size_t d = basis_names_.size();
  if (d == 0) throw AlgebraError("algebra '" + name_ + "' has dimension 0");
  if (table_.size() != d * d) throw AlgebraError("algebra '" + name_ + "': structure table must have dim^2 entries");
  auto in_range = [d](const SparseVector& v) { return v.empty() || v.back().index < d; };
  if (!in_range(unit_)) throw AlgebraError("algebra '" + name_ + "': unit has out-of-range coordinates");
  for (const auto& v : table_)
    if (!in_range(v)) throw AlgebraError("algebra '" + name_ + "': structure constant index out of range");
  brackets_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      brackets_[i * d + j] = axpy(table_[i * d + j], -1, table_[j * d + i]);
      if (!brackets_[i * d + j].empty()) commutative_ = false;
    }
}

std::uint64_t Algebra::content_hash() const {
  std::ostringstream os;
  os << dim() << ';';
  for (const auto& e : unit_) os << e.index << ':' << to_string(e.value) << ',';
  os << ';';
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (table_[k].empty()) continue;
    os << k << '=';
    for (const auto& e : table_[k]) os << e.index << ':' << to_string(e.value) << ',';
    os << ';';
  }
  return stable_hash(os.str());
}

AlgebraElement multiply(const Algebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  const std::size_t d = a.dim();
  if ((!x.empty() && x.back().index >= d) || (!y.empty() && y.back().index >= d))
    throw AlgebraError("multiply: element does not conform to algebra '" + a.name() + "'");
  VectorAccumulator acc;
  for (const auto& ex : x)
    for (const auto& ey : y) acc.add_scaled(a.product(ex.index, ey.index), ex.value * ey.value);
  return acc.finish();
}

AlgebraElement bracket(const Algebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  return axpy(multiply(a, x, y), -1, multiply(a, y, x));
}

ValidationReport validate_algebra(const Algebra& a, std::size_t max_failures) {
  ValidationReport rep;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    auto ei = unit_vector(static_cast<std::uint32_t>(i));
    if (!same_vector(multiply(a, a.unit(), ei), ei) || !same_vector(multiply(a, ei, a.unit()), ei)) {
      rep.ok = false;
      rep.unit_failures.push_back(i);
      if (rep.failures.size() < max_failures)
        rep.failures.push_back("unit law fails on basis element " + a.basis_names()[i]);
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        auto lhs = multiply(a, ij, unit_vector(static_cast<std::uint32_t>(k)));
        auto rhs = multiply(a, unit_vector(static_cast<std::uint32_t>(i)), a.product(j, k));
        if (same_vector(lhs, rhs)) continue;
        rep.ok = false;
        if (rep.associativity_failures.size() < max_failures) {
          rep.associativity_failures.push_back({i, j, k});
          rep.failures.push_back("associativity fails on triple (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ", " + std::to_string(k) + ") = (" + a.basis_names()[i] + ", " + a.basis_names()[j] +
                                 ", " + a.basis_names()[k] + ")");
        }
      }
    }
  return rep;
}

namespace {

AlgebraPtr truncated_poly(int m, const std::string& name, const std::string& var) {
  std::vector<std::string> names;
  for (int k = 0; k < m; ++k) names.push_back(k == 0 ? "1" : (k == 1 ? var : var + "^" + std::to_string(k)));
  std::vector<SparseVector> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a + b < m) table[a * m + b] = unit_vector(a + b);
  return std::make_shared<Algebra>(name, names, unit_vector(0), std::move(table));
}

AlgebraPtr split_algebra(int m) {
  std::vector<std::string> names;
  for (int k = 0; k < m; ++k) names.push_back("e" + std::to_string(k + 1));
  std::vector<SparseVector> table(static_cast<std::size_t>(m) * m);
  SparseVector unit;
  for (int k = 0; k < m; ++k) {
    table[k * m + k] = unit_vector(k);
    unit.push_back({static_cast<std::uint32_t>(k), 1});
  }
  return std::make_shared<Algebra>("split:" + std::to_string(m), names, unit, std::move(table));
}

int parse_positive(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw AlgebraError("bad integer");
    if (v <= 0) throw AlgebraError(what + " parameter must be positive");
    return v;
  } catch (const std::logic_error&) {
    throw AlgebraError("malformed " + what + " parameter '" + s + "'");
  }
}

}  // namespace

AlgebraPtr group_algebra(const std::vector<std::vector<int>>& cayley, const std::string& name,
                         std::vector<std::string> element_names) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw AlgebraError("group table is empty");
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n) throw AlgebraError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw AlgebraError("group table is not closed: entry " + std::to_string(v) + " out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw AlgebraError("group table violates associativity at (" + std::to_string(a) + ", " + std::to_string(b) +
                             ", " + std::to_string(c) + ")");
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = cayley[e][g] == g && cayley[g][e] == g;
    if (ok) identity = e;
  }
  if (identity < 0) throw AlgebraError("group table has no identity element");
  GroupData gd;
  gd.table = cayley;
  gd.identity = identity;
  gd.inverse.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (cayley[g][h] == identity && cayley[h][g] == identity) gd.inverse[g] = h;
    if (gd.inverse[g] < 0) throw AlgebraError("group table: element " + std::to_string(g) + " has no inverse");
  }
  if (element_names.empty())
    for (int g = 0; g < n; ++g) element_names.push_back("g" + std::to_string(g));
  if (static_cast<int>(element_names.size()) != n) throw AlgebraError("group element names do not match table size");
  std::vector<SparseVector> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = unit_vector(cayley[a][b]);
  auto alg = std::make_shared<Algebra>(name, std::move(element_names), unit_vector(identity), std::move(table));
  alg->set_group(std::move(gd));
  return alg;
}

AlgebraPtr matrix_algebra(const AlgebraPtr& base, int n, std::size_t max_dim) {
  if (n < 1) throw AlgebraError("matrix size must be positive");
  const std::size_t d = base->dim();
  const std::size_t dim = static_cast<std::size_t>(n) * n * d;
  if (dim > max_dim)
    throw AlgebraError("M_" + std::to_string(n) + "(" + base->name() + ") has dimension " + std::to_string(dim) +
                       ", above the bound " + std::to_string(max_dim));
  MatrixData md{n, base};
  std::vector<std::string> names(dim);
  for (std::size_t k = 0; k < dim; ++k)
    names[k] = "E" + std::to_string(md.row(k) + 1) + std::to_string(md.col(k) + 1) + "[" +
               base->basis_names()[md.entry(k)] + "]";
  std::vector<SparseVector> table(dim * dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      if (md.col(p) != md.row(q)) continue;
      SparseVector v;
      for (const auto& e : base->product(md.entry(p), md.entry(q)))
        v.push_back({static_cast<std::uint32_t>(md.index(md.row(p), md.col(q), e.index)), e.value});
      table[p * dim + q] = std::move(v);
    }
  SparseVector unit;
  for (int i = 0; i < n; ++i)
    for (const auto& e : base->unit())
      unit.push_back({static_cast<std::uint32_t>(md.index(i, i, e.index)), e.value});
  std::sort(unit.begin(), unit.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  auto alg = std::make_shared<Algebra>("matrix:" + std::to_string(n) + ":" + base->name(), std::move(names),
                                       std::move(unit), std::move(table));
  alg->set_matrix(std::move(md));
  return alg;
}

AlgebraPtr builtin_algebra(const std::string& name, const std::vector<int>& params) {
  auto param = [&](int def) {
    int v = params.empty() ? def : params[0];
    if (v <= 0) throw AlgebraError("builtin '" + name + "': parameter must be positive");
    return v;
  };
  if (name == "rationals") return truncated_poly(1, "rationals", "x");
  if (name == "dual") return truncated_poly(2, "dual", "eps");
  if (name == "truncated_poly") {
    int m = param(3);
    return truncated_poly(m, "truncated_poly:" + std::to_string(m), "x");
  }
  if (name == "split") return split_algebra(param(2));
  if (name == "cyclic") {
    int n = param(2);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
      names.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return group_algebra(t, "cyclic:" + std::to_string(n), names);
  }
  if (name == "trivial") return group_algebra({{0}}, "trivial", {"1"});
  if (name == "s3") {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::array<int, 3>& q) {
      return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    std::vector<std::string> names;
    for (int a = 0; a < 6; ++a) {
      std::string s = "[";
      for (int k = 0; k < 3; ++k) s += std::to_string(perms[a][k] + 1);
      names.push_back(s + "]");
      for (int b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]];
        t[a][b] = index_of(c);
      }
    }
    return group_algebra(t, "s3", names);
  }
  throw AlgebraError("unknown builtin algebra '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> builtin_catalogue() {
  return {{"rationals", "Q"},
          {"dual", "Q[eps]/(eps^2)"},
          {"truncated_poly:m", "Q[x]/(x^m), commutative, dim m"},
          {"split:m", "Q^m with idempotent basis"},
          {"cyclic:n", "group algebra Q[C_n]"},
          {"s3", "group algebra Q[S_3], noncommutative, dim 6"},
          {"trivial", "group algebra of the trivial group"},
          {"matrix:N:<algebra>", "M_N(A), basis E^{e_b}_{ij} ordered by (i, j, b)"}};
}

AlgebraPtr algebra_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "matrix") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw AlgebraError("matrix spec must be matrix:N:<algebra>");
    int n = parse_positive(rest.substr(0, c2), "matrix size");
    return matrix_algebra(algebra_from_spec(rest.substr(c2 + 1)), n);
  }
  if (head == "rationals" || head == "dual" || head == "s3") {
    if (!rest.empty()) throw AlgebraError("builtin '" + head + "' takes no parameter");
    return builtin_algebra(head);
  }
  if (head == "trivial") return builtin_algebra("cyclic", {1});
  if (head == "truncated_poly" || head == "split" || head == "cyclic") {
    if (rest.empty()) return builtin_algebra(head);
    return builtin_algebra(head, {parse_positive(rest, head)});
  }
  throw AlgebraError("unknown builtin algebra '" + spec + "'");
}

MorphismReport validate_morphism(const AlgebraMorphism& f) {
  MorphismReport rep;
  const Algebra& A = *f.source;
  const Algebra& B = *f.target;
  if (f.matrix.rows() != B.dim() || f.matrix.cols() != A.dim()) {
    rep.multiplicative = rep.unital = false;
    rep.failures.push_back("matrix shape does not match source/target dimensions");
    return rep;
  }
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      auto lhs = f.apply(A.product(i, j));
      auto rhs = multiply(B, f.matrix.column(i), f.matrix.column(j));
      if (!same_vector(lhs, rhs)) {
        rep.multiplicative = false;
        if (rep.failures.size() < 16)
          rep.failures.push_back("f(e_" + std::to_string(i) + " e_" + std::to_string(j) + ") != f(e_" +
                                 std::to_string(i) + ") f(e_" + std::to_string(j) + ")");
      }
    }
  if (!same_vector(f.apply(A.unit()), B.unit())) {
    rep.unital = false;
    rep.failures.push_back("f(1) != 1");
  }
  auto rki = rank_kernel_image(f.matrix);
  rep.surjective = rki.rank == B.dim();
  rep.injective = rki.rank == A.dim();
  rep.kernel_dim = rki.kernel.size();
  if (rki.kernel.empty()) {
    rep.nilpotency_degree = 0;
    return rep;
  }
  // K^{m+1} = span{k x : k in K, x in K^m}; stop at zero or after dim(A) powers.
  std::vector<SparseVector> power = rki.kernel;
  for (std::size_t m = 1; m <= A.dim(); ++m) {
    if (power.empty()) {
      rep.nilpotency_degree = m;
      return rep;
    }
    Echelon next(A.dim());
    std::vector<SparseVector> basis;
    for (const auto& k : rki.kernel)
      for (const auto& x : power) {
        auto p = multiply(A, k, x);
        if (next.insert(p)) basis.push_back(std::move(p));
      }
    if (basis.empty()) {
      rep.nilpotency_degree = m + 1;
      return rep;
    }
    power = std::move(basis);
  }
  return rep;
}

AlgebraMorphism identity_morphism(const AlgebraPtr& a) {
  return {a, a, SparseMatrix::identity(a->dim()), "identity:" + a->name()};
}

AlgebraMorphism matrix_morphism(const AlgebraMorphism& f, const AlgebraPtr& source_matrix,
                                const AlgebraPtr& target_matrix) {
  const auto& ms = source_matrix->matrix();
  const auto& mt = target_matrix->matrix();
  if (!ms || !mt || ms->size != mt->size) throw AlgebraError("matrix_morphism: incompatible matrix algebras");
  SparseMatrix m(target_matrix->dim(), source_matrix->dim());
  for (std::size_t k = 0; k < source_matrix->dim(); ++k) {
    SparseVector col;
    for (const auto& e : f.matrix.column(ms->entry(k)))
      col.push_back({static_cast<std::uint32_t>(mt->index(ms->row(k), ms->col(k), e.index)), e.value});
    m.set_column(k, std::move(col));
  }
  return {source_matrix, target_matrix, std::move(m), "matrix:" + std::to_string(ms->size) + ":" + f.name};
}

AlgebraMorphism builtin_morphism(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "identity") return identity_morphism(algebra_from_spec(rest));
  if (head == "augmentation") {
    int m = rest.empty() ? 3 : parse_positive(rest, "augmentation");
    auto src = m == 2 ? builtin_algebra("dual") : builtin_algebra("truncated_poly", {m});
    auto tgt = builtin_algebra("rationals");
    SparseMatrix mat(1, src->dim());
    mat.set_column(0, unit_vector(0));
    return {src, tgt, std::move(mat), "augmentation:" + std::to_string(m)};
  }
  if (head == "split_projection") {
    auto src = builtin_algebra("split", {2});
    auto tgt = builtin_algebra("rationals");
    SparseMatrix mat(1, 2);
    mat.set_column(0, unit_vector(0));
    return {src, tgt, std::move(mat), "split_projection"};
  }
  throw AlgebraError("unknown builtin morphism '" + spec + "'");
}

}  // namespace lhh
