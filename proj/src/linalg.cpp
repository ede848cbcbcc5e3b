#include "lhh/linalg.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace lhh {

namespace {

struct IntEntry {
  std::uint32_t index;
  Integer value;
};
using IntVector = std::vector<IntEntry>;

void make_primitive(IntVector& v) {
  if (v.empty()) return;
  Integer g = abs(v[0].value);
  for (std::size_t i = 1; i < v.size() && g != 1; ++i) g = gcd(g, v[i].value);
  if (g == 1) return;
  for (auto& e : v) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

IntVector to_integer_vector(const SparseVector& v) {
  Integer l = 1;
  for (const auto& e : v) l = lcm(l, e.value.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.index, Integer(e.value.get_num() * (l / e.value.get_den()))});
  make_primitive(out);
  return out;
}

const Integer* find_entry(const IntVector& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const IntEntry& e, std::uint32_t i) { return e.index < i; });
  return (it != v.end() && it->index == index) ? &it->value : nullptr;
}

// v <- a v - b p, reporting indices of p that were not present in v.
void combine(IntVector& v, const Integer& a, const Integer& b, const IntVector& p, std::vector<std::uint32_t>& fresh) {
  IntVector out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, j = 0;
  const bool unit_a = (a == 1);
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].index < p[j].index)) {
      if (unit_a) out.push_back(std::move(v[i]));
      else out.push_back({v[i].index, Integer(a * v[i].value)});
      ++i;
    } else if (i == v.size() || p[j].index < v[i].index) {
      out.push_back({p[j].index, Integer(-b * p[j].value)});
      fresh.push_back(p[j].index);
      ++j;
    } else {
      Integer x = unit_a ? Integer(v[i].value - b * p[j].value) : Integer(a * v[i].value - b * p[j].value);
      if (x != 0) out.push_back({v[i].index, std::move(x)});
      ++i;
      ++j;
    }
  }
  v = std::move(out);
  if (!unit_a) make_primitive(v);
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  // Vectors run along the longer side so that their length is bounded by the shorter one.
  std::vector<SparseVector> source;
  std::size_t index_space;
  if (m.rows() <= m.cols()) {
    source.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) source.push_back(m.column(j));
    index_space = m.rows();
  } else {
    source = m.row_vectors();
    index_space = m.cols();
  }

  std::vector<IntVector> vecs;
  vecs.reserve(source.size());
  for (auto& s : source) {
    vecs.push_back(to_integer_vector(s));
    SparseVector().swap(s);
  }

  std::vector<std::vector<std::uint32_t>> occ(index_space);
  using Key = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
  std::vector<char> active(vecs.size(), 0);
  for (std::uint32_t id = 0; id < vecs.size(); ++id) {
    if (vecs[id].empty()) continue;
    active[id] = 1;
    for (const auto& e : vecs[id]) occ[e.index].push_back(id);
    queue.push({vecs[id].size(), id});
  }

  std::size_t r = 0;
  std::vector<std::uint32_t> fresh;
  while (!queue.empty() && r < index_space) {
    auto [len, id] = queue.top();
    queue.pop();
    if (!active[id] || vecs[id].size() != len) continue;
    IntVector pivot = std::move(vecs[id]);
    active[id] = 0;

    // Choose pivot index: fewest occurrences, then smallest entry.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pivot.size(); ++k) {
      std::size_t ok = occ[pivot[k].index].size(), ob = occ[pivot[best].index].size();
      if (ok < ob) best = k;
      else if (ok == ob && mpz_cmpabs(pivot[k].value.get_mpz_t(), pivot[best].value.get_mpz_t()) < 0) best = k;
    }
    const std::uint32_t pidx = pivot[best].index;
    const Integer pval = pivot[best].value;
    ++r;

    std::vector<std::uint32_t> hits;
    hits.swap(occ[pidx]);
    for (std::uint32_t other : hits) {
      if (!active[other]) continue;
      const Integer* vv = find_entry(vecs[other], pidx);
      if (vv == nullptr) continue;
      Integer g = gcd(pval, *vv);
      Integer a = pval / g, b = *vv / g;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      fresh.clear();
      combine(vecs[other], a, b, pivot, fresh);
      for (std::uint32_t f : fresh)
        if (f != pidx) occ[f].push_back(other);
      if (vecs[other].empty()) {
        active[other] = 0;
      } else {
        queue.push({vecs[other].size(), other});
      }
    }
  }
  return r;
}

Echelon::Echelon(std::size_t ambient, bool track_combinations)
    : pivot_row_(ambient, -1), track_(track_combinations) {}

SparseVector Echelon::reduce_tracked(const SparseVector& v, SparseVector* combination) const {
  VectorAccumulator acc, comb;
  bool touched = false;
  for (const auto& e : v) {
    if (e.index >= pivot_row_.size()) throw std::out_of_range("Echelon: vector index beyond ambient dimension");
    long q = pivot_row_[e.index];
    if (q < 0) continue;
    touched = true;
    acc.add_scaled(rows_[q], -e.value);
    if (combination) comb.add_scaled(combos_[q], -e.value);
  }
  if (combination) *combination = comb.finish();
  if (!touched) return v;
  acc.add_scaled(v, 1);
  return acc.finish();
}

SparseVector Echelon::reduce(const SparseVector& v) const { return reduce_tracked(v, nullptr); }

bool Echelon::insert(const SparseVector& v) {
  SparseVector comb;
  SparseVector r = reduce_tracked(v, track_ ? &comb : nullptr);
  if (r.empty()) return false;
  if (track_) comb = axpy(comb, 1, unit_vector(static_cast<std::uint32_t>(accepted_)));
  ++accepted_;
  const std::uint32_t c = r.front().index;
  Rational inv = 1 / r.front().value;
  for (auto& e : r) e.value *= inv;
  if (track_)
    for (auto& e : comb) e.value *= inv;
  for (std::size_t q = 0; q < rows_.size(); ++q) {
    Rational f = coefficient(rows_[q], c);
    if (f == 0) continue;
    rows_[q] = axpy(rows_[q], -f, r);
    if (track_) combos_[q] = axpy(combos_[q], -f, comb);
  }
  pivot_row_[c] = static_cast<long>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(std::move(r));
  if (track_) combos_.push_back(std::move(comb));
  return true;
}

std::optional<SparseVector> Echelon::solve(const SparseVector& v) const {
  if (!track_) throw std::logic_error("Echelon::solve requires combination tracking");
  SparseVector comb;
  SparseVector r = reduce_tracked(v, &comb);
  if (!r.empty()) return std::nullopt;
  // v = sum v[pc] row_q and row_q = sum combos_q, so the coefficients are -comb.
  for (auto& e : comb) e.value = -e.value;
  return comb;
}

std::vector<SparseVector> Echelon::null_space() const {
  const std::size_t n = pivot_row_.size();
  std::vector<VectorAccumulator> acc(n);
  for (const auto& row : rows_) {
    std::uint32_t pc = row.front().index;
    for (const auto& e : row)
      if (e.index != pc) acc[e.index].add(pc, -e.value);
  }
  std::vector<SparseVector> out;
  for (std::uint32_t f = 0; f < n; ++f) {
    if (pivot_row_[f] >= 0) continue;
    acc[f].add(f, 1);
    out.push_back(acc[f].finish());
  }
  return out;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  Echelon e(m.cols());
  for (const auto& row : m.row_vectors()) e.insert(row);
  return e.null_space();
}

RankKernelImage rank_kernel_image(const SparseMatrix& m) {
  RankKernelImage out;
  auto solver = std::make_shared<Echelon>(m.rows(), true);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (solver->insert(m.column(j))) {
      out.image.push_back(m.column(j));
      out.image_columns.push_back(j);
    }
  }
  out.rank = solver->rank();
  out.kernel = kernel_basis(m);
  out.solver = std::move(solver);
  return out;
}

}  // namespace lhh
