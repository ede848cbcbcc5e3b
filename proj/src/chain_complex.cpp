#include "lhh/chain_complex.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace lhh {

const SparseMatrix& ChainComplex::d(int n) const {
  if (n < 0 || n > cutoff) throw std::out_of_range(kind + ": boundary degree " + std::to_string(n) + " out of range");
  return boundary[n];
}

const SparseMatrix& ChainMapRep::at(int n) const {
  if (!has(n)) throw std::out_of_range(kind + ": no map in degree " + std::to_string(n));
  return *maps[n];
}

namespace {

std::string describe_entry(const SparseMatrix& m, long r, long c) {
  std::ostringstream os;
  os << "column " << c << ", row " << r << " = " << to_string(m.at(r, c));
  return os.str();
}

}  // namespace

CheckResult verify_boundary_squares(const ChainComplex& c) {
  for (int n = 2; n <= c.cutoff; ++n) {
    auto sq = multiply(c.d(n - 1), c.d(n));
    if (sq.is_zero()) continue;
    for (std::size_t j = 0; j < sq.cols(); ++j)
      if (!sq.column(j).empty())
        return CheckResult::fail(c.kind + ": d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0 at " +
                                 describe_entry(sq, sq.column(j).front().index, static_cast<long>(j)));
  }
  return CheckResult::pass();
}

CheckResult verify_chain_map(const ChainMapRep& f) {
  const ChainComplex& s = *f.source;
  const ChainComplex& t = *f.target;
  for (int n = f.shift; n <= f.last_degree(); ++n) {
    if (!f.has(n)) continue;
    const auto& m = f.at(n);
    if (m.cols() != s.dim(n) || m.rows() != t.dim(n - f.shift))
      return CheckResult::fail(f.kind + ": map in degree " + std::to_string(n) + " has the wrong shape");
  }
  for (int n = f.shift + 1; n <= f.last_degree(); ++n) {
    if (!f.has(n) || !f.has(n - 1) || n > s.cutoff || n - f.shift > t.cutoff) continue;
    auto lhs = multiply(t.d(n - f.shift), f.at(n));
    auto rhs = multiply(f.at(n - 1), s.d(n));
    if (f.sign != 1) rhs = scaled(rhs, f.sign);
    auto [r, c] = first_difference(lhs, rhs);
    if (r == -1) continue;
    std::ostringstream os;
    os << f.kind << ": square fails in source degree " << n << " at source basis element " << c << ", target row " << r
       << " (d F = " << to_string(lhs.at(r, c)) << ", F d = " << to_string(rhs.at(r, c)) << ")";
    return CheckResult::fail(os.str());
  }
  return CheckResult::pass();
}

CheckResult same_chain_map(const ChainMapRep& a, const ChainMapRep& b) {
  if (a.shift != b.shift) return CheckResult::fail(a.kind + " vs " + b.kind + ": shifts differ");
  int top = std::min(a.last_degree(), b.last_degree());
  for (int n = 0; n <= top; ++n) {
    if (a.has(n) != b.has(n)) return CheckResult::fail("degree " + std::to_string(n) + " defined on one side only");
    if (!a.has(n)) continue;
    auto [r, c] = first_difference(a.at(n), b.at(n));
    if (r == -1) continue;
    if (r == -2) return CheckResult::fail("degree " + std::to_string(n) + ": shapes differ");
    std::ostringstream os;
    os << a.kind << " != " << b.kind << " in degree " << n << " at column " << c << ", row " << r << " ("
       << to_string(a.at(n).at(r, c)) << " vs " << to_string(b.at(n).at(r, c)) << ")";
    return CheckResult::fail(os.str());
  }
  return CheckResult::pass();
}

ChainMapRep compose(const ChainMapRep& g, const ChainMapRep& f, std::string kind) {
  ChainMapRep out;
  out.kind = kind.empty() ? g.kind + "*" + f.kind : std::move(kind);
  out.source = f.source;
  out.target = g.target;
  out.shift = f.shift + g.shift;
  out.sign = f.sign * g.sign;
  out.maps.resize(std::max(0, f.last_degree() + 1));
  for (int n = 0; n <= f.last_degree(); ++n) {
    if (!f.has(n) || !g.has(n - f.shift)) continue;
    out.maps[n] = multiply(g.at(n - f.shift), f.at(n));
  }
  return out;
}

ChainMapRep identity_map(const ComplexPtr& c) {
  ChainMapRep out{"ID", c, c, 0, 1, {}};
  out.maps.resize(c->cutoff + 1);
  for (int n = 0; n <= c->cutoff; ++n) out.maps[n] = SparseMatrix::identity(c->dim(n));
  return out;
}

ChainMapRep zero_map(const ComplexPtr& source, const ComplexPtr& target) {
  ChainMapRep out{"ZERO", source, target, 0, 1, {}};
  int top = std::min(source->cutoff, target->cutoff);
  out.maps.resize(top + 1);
  for (int n = 0; n <= top; ++n) out.maps[n] = SparseMatrix(target->dim(n), source->dim(n));
  return out;
}

class HomologySolver {
 public:
  HomologySolver(const SparseMatrix* out_boundary, std::size_t ambient)
      : out_(out_boundary), boundaries_(ambient), classes_(ambient, true) {}

  const SparseMatrix* out_;  // d_n, or nullptr in degree 0
  Echelon boundaries_;
  Echelon classes_;

  bool is_cycle(const SparseVector& v) const { return out_ == nullptr || out_->apply(v).empty(); }
};

SparseVector HomologyData::coordinates(const SparseVector& v) const {
  if (!solver->is_cycle(v)) throw std::domain_error("homology coordinates requested for a non-cycle");
  auto nf = solver->boundaries_.reduce(v);
  auto sol = solver->classes_.solve(nf);
  if (!sol) throw std::logic_error("homology solver: cycle outside the span of the representatives");
  return *sol;
}

bool HomologyData::is_boundary(const SparseVector& v) const { return solver->boundaries_.reduce(v).empty(); }

HomologyData homology(const ChainComplex& c, int n) {
  if (n < 0 || n > c.cutoff - 1)
    throw std::out_of_range(c.kind + ": homology in degree " + std::to_string(n) + " needs cutoff >= " +
                            std::to_string(n + 1) + " (cutoff is " + std::to_string(c.cutoff) + ")");
  const std::size_t dim = c.dim(n);
  auto solver = std::make_shared<HomologySolver>(n == 0 ? nullptr : &c.d(n), dim);
  std::vector<SparseVector> cycles;
  if (n == 0) {
    for (std::size_t k = 0; k < dim; ++k) cycles.push_back(unit_vector(static_cast<std::uint32_t>(k)));
  } else {
    cycles = kernel_basis(c.d(n));
  }
  const auto& in = c.d(n + 1);
  for (std::size_t j = 0; j < in.cols(); ++j) solver->boundaries_.insert(in.column(j));
  HomologyData h;
  h.degree = n;
  for (auto& z : cycles) {
    if (solver->classes_.insert(solver->boundaries_.reduce(z))) h.representatives.push_back(std::move(z));
  }
  h.betti = h.representatives.size();
  h.solver = std::move(solver);
  return h;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

BettiTable betti_numbers(const ChainComplex& c, unsigned jobs) {
  BettiTable t;
  t.ranks.assign(c.cutoff + 2, 0);
  parallel_for(static_cast<std::size_t>(c.cutoff), jobs, [&](std::size_t k) {
    int n = static_cast<int>(k) + 1;
    t.ranks[n] = rank(c.d(n));
  });
  t.betti.resize(c.cutoff + 1);
  for (int n = 0; n <= c.cutoff; ++n) t.betti[n] = c.dim(n) - t.ranks[n] - t.ranks[n + 1];
  t.ranks.pop_back();
  t.valid_through = c.cutoff - 1;
  return t;
}

SparseMatrix induced_map(const ChainMapRep& f, const HomologyData& source, const HomologyData& target) {
  if (target.degree != source.degree - f.shift) throw std::invalid_argument("induced_map: degree mismatch");
  SparseMatrix m(target.betti, source.betti);
  const auto& fn = f.at(source.degree);
  for (std::size_t l = 0; l < source.betti; ++l) {
    auto image = fn.apply(source.representatives[l]);
    try {
      m.set_column(l, target.coordinates(image));
    } catch (const std::domain_error&) {
      throw std::domain_error(f.kind + ": image of representative " + std::to_string(l) + " in degree " +
                              std::to_string(source.degree) + " is not a cycle (map not verified?)");
    }
  }
  return m;
}

SparseMatrix induced_map(const ChainMapRep& f, int n) {
  return induced_map(f, homology(*f.source, n), homology(*f.target, n - f.shift));
}

std::size_t induced_rank(const ChainMapRep& f, int n) {
  const ChainComplex& s = *f.source;
  const ChainComplex& t = *f.target;
  const int m = n - f.shift;
  if (m < 0 || m + 1 > t.cutoff) throw std::out_of_range(f.kind + ": target homology degree out of range");
  const SparseMatrix& ds = s.d(n);
  const SparseMatrix& dt = t.d(m + 1);
  const SparseMatrix& fm = f.at(n);
  SparseMatrix zero;
  auto phi = block_matrix({ds.rows(), dt.rows()}, {ds.cols(), dt.cols()}, {{&ds, nullptr}, {&fm, &dt}});
  return rank(phi) - rank(ds) - rank(dt);
}

MappingCone mapping_cone(const ChainMapRep& f) {
  if (f.shift != 0) throw std::invalid_argument("mapping_cone: chain map must have shift 0");
  const ChainComplex& C = *f.source;
  const ChainComplex& D = *f.target;
  // M_n only involves C_{n-1}, so the source may stop one degree earlier.
  const int cutoff = std::min(C.cutoff + 1, D.cutoff);
  for (int n = 0; n < cutoff; ++n)
    if (!f.has(n)) throw std::invalid_argument("mapping_cone: map missing in degree " + std::to_string(n));
  auto M = std::make_shared<ChainComplex>();
  M->kind = "CONE(" + f.kind + ")";
  M->cutoff = cutoff;
  for (int n = 0; n <= cutoff; ++n) M->dims.push_back(C.dim(n - 1) + D.dim(n));
  M->boundary.push_back(SparseMatrix(0, M->dims[0]));
  for (int n = 1; n <= cutoff; ++n) {
    SparseMatrix neg = n >= 2 ? scaled(C.d(n - 1), -1) : SparseMatrix(0, C.dim(n - 1));
    const SparseMatrix& fn = f.at(n - 1);
    M->boundary.push_back(
        block_matrix({C.dim(n - 2), D.dim(n - 1)}, {C.dim(n - 1), D.dim(n)}, {{&neg, nullptr}, {&fn, &D.d(n)}}));
  }
  MappingCone out;
  out.cone = M;
  out.proj = ChainMapRep{"CONE_PROJ", M, f.source, 1, -1, {}};
  out.incl = ChainMapRep{"CONE_INCL", f.target, M, 0, 1, {}};
  out.proj.maps.resize(cutoff + 1);
  out.incl.maps.resize(cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) {
    auto id = SparseMatrix::identity(C.dim(n - 1));
    out.proj.maps[n] = block_matrix({C.dim(n - 1)}, {C.dim(n - 1), D.dim(n)}, {{&id, nullptr}});
  }
  for (int n = 0; n <= cutoff; ++n) {
    auto id = SparseMatrix::identity(D.dim(n));
    out.incl.maps[n] = block_matrix({C.dim(n - 1), D.dim(n)}, {D.dim(n)}, {{nullptr}, {&id}});
  }
  return out;
}

ChainMapRep cone_map(const MappingCone& from, const MappingCone& to, const ChainMapRep& on_source,
                     const ChainMapRep& on_target, std::string kind) {
  if (on_source.shift != on_target.shift) throw std::invalid_argument("cone_map: shifts differ");
  const int s = on_source.shift;
  const ChainComplex& C = *on_source.source;
  const ChainComplex& Cp = *on_target.source;
  const ChainComplex& D = *on_source.target;
  const ChainComplex& Dp = *on_target.target;
  ChainMapRep out;
  out.kind = kind.empty() ? "CONE(" + on_target.kind + ")" : std::move(kind);
  out.source = from.cone;
  out.target = to.cone;
  out.shift = s;
  const int top = std::min(from.cone->cutoff, to.cone->cutoff + s);
  out.maps.resize(top + 1);
  for (int n = s; n <= top; ++n) {
    if (!on_target.has(n)) continue;
    SparseMatrix zero(D.dim(n - 1 - s), C.dim(n - 1));
    const SparseMatrix* fs = &zero;
    if (n - 1 >= s && C.dim(n - 1) > 0) {
      if (!on_source.has(n - 1)) continue;
      fs = &on_source.at(n - 1);
    }
    out.maps[n] = block_matrix({D.dim(n - 1 - s), Dp.dim(n - s)}, {C.dim(n - 1), Cp.dim(n)},
                               {{fs, nullptr}, {nullptr, &on_target.at(n)}});
  }
  return out;
}

bool ExactnessReport::ok() const {
  for (const auto& n : nodes)
    if (!n.ok()) return false;
  return true;
}

ExactnessReport exactness_check(const std::vector<SparseMatrix>& maps, const std::vector<std::string>& node_labels) {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (maps[k + 1].cols() != maps[k].rows())
      throw std::invalid_argument("exactness_check: maps " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                  " are not composable");
  ExactnessReport rep;
  std::vector<std::size_t> ranks;
  for (const auto& m : maps) ranks.push_back(rank(m));
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    ExactnessNode node;
    node.label = k + 1 < node_labels.size() ? node_labels[k + 1] : "V" + std::to_string(k + 1);
    node.composite_zero = multiply(maps[k + 1], maps[k]).is_zero();
    node.incoming_rank = ranks[k];
    node.outgoing_nullity = maps[k + 1].cols() - ranks[k + 1];
    node.ranks_match = node.incoming_rank == node.outgoing_nullity;
    rep.nodes.push_back(std::move(node));
  }
  return rep;
}

LongExactSequence cone_long_exact_sequence(const ChainMapRep& f, const MappingCone& cone, int top) {
  LongExactSequence les;
  std::vector<HomologyData> hc, hd, hm;
  for (int m = 0; m <= top; ++m) {
    hc.push_back(homology(*f.source, m));
    hd.push_back(homology(*f.target, m));
    hm.push_back(homology(*cone.cone, m));
  }
  auto rel = [](int m) { return "H_" + std::to_string(m - 1) + "(f)"; };
  for (int m = top; m >= 0; --m) {
    les.labels.push_back("H_" + std::to_string(m) + "(C)");
    les.maps.push_back(induced_map(f, hc[m], hd[m]));
    les.labels.push_back("H_" + std::to_string(m) + "(C')");
    les.maps.push_back(induced_map(cone.incl, hd[m], hm[m]));
    les.labels.push_back(rel(m));
    if (m > 0) les.maps.push_back(induced_map(cone.proj, hm[m], hc[m - 1]));
    else les.maps.push_back(SparseMatrix(0, hm[0].betti));
  }
  les.labels.push_back("0");
  return les;
}

}  // namespace lhh
