#include "lhh/chain_maps.hpp"

#include "lhh/bases.hpp"
#include "lhh/permutation.hpp"

#include <functional>

namespace lhh {

namespace {

/// Permutations p of {0..k-1} with their signs, p applied as out[1 + t] = in[1 + p[t]].
struct SignedArrangements {
  std::vector<std::vector<int>> perms;
  std::vector<int> signs;
  explicit SignedArrangements(int k) {
    for (const auto& p : symmetric_group(k)) {
      perms.push_back(p.images());
      signs.push_back(p.sign());
    }
  }
};

/// Starts a map and fills every degree m with shift <= m, m <= source cutoff, m - shift <= target cutoff.
ChainMapRep fill_map(std::string kind, const ComplexPtr& src, const ComplexPtr& tgt, int shift,
                     const std::function<SparseMatrix(int)>& degree_map, int first = 0) {
  ChainMapRep f{std::move(kind), src, tgt, shift, 1, {}};
  f.maps.resize(src->cutoff + 1);
  for (int m = std::max(first, std::max(0, shift)); m <= src->cutoff; ++m) {
    if (m - shift > tgt->cutoff) break;
    f.maps[m] = degree_map(m);
    if (f.maps[m]->rows() != tgt->dim(m - shift) || f.maps[m]->cols() != src->dim(m))
      throw std::logic_error(f.kind + ": degree " + std::to_string(m) + " shape does not match the complexes");
  }
  return f;
}

const MatrixData& matrix_data(const Algebra& a) {
  if (!a.matrix()) throw AlgebraError(a.name() + " is not a matrix algebra");
  return *a.matrix();
}

TensorBasis cl_basis(const Algebra& a, const ChainComplex& cl, int n) {
  return TensorBasis(a.dim(), n, (cl.weight_zero && n > 0) ? &matrix_data(a) : nullptr);
}

void expect_kind(const ComplexPtr& c, const std::string& kind, const std::string& who) {
  if (c->kind != kind) throw std::invalid_argument(who + ": expected a " + kind + " complex, got " + c->kind);
}

/// Calls fn(letters, coefficient) for every basis tensor in f(e_{l_0}) (x) ... (x) f(e_{l_k}).
void expand_tensor(const SparseMatrix& f, const std::vector<int>& letters,
                   const std::function<void(const std::vector<int>&, const Rational&)>& fn) {
  std::vector<int> out(letters.size());
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t s, const Rational& c) {
    if (s == letters.size()) {
      fn(out, c);
      return;
    }
    for (const auto& e : f.column(letters[s])) {
      out[s] = static_cast<int>(e.index);
      rec(s + 1, c * e.value);
    }
  };
  rec(0, Rational(1));
}

}  // namespace

std::string map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::PHI: return "PHI";
    case MapKind::THETA: return "THETA";
    case MapKind::EPSILON: return "EPSILON";
    case MapKind::PROJ_LIE: return "PROJ_LIE";
    case MapKind::PROJ_ADJ: return "PROJ_ADJ";
    case MapKind::PROJ_I: return "PROJ_I";
    case MapKind::P_KAHLER: return "P_KAHLER";
    case MapKind::TRACE: return "TRACE";
    case MapKind::CORNER: return "CORNER";
    case MapKind::LIFT_P: return "LIFT_P";
    case MapKind::THETA_NF: return "THETA_NF";
    case MapKind::BAR_PI: return "BAR_PI";
    case MapKind::BAR_IOTA: return "BAR_IOTA";
    case MapKind::EMBED_CY: return "EMBED_CY";
  }
  return "?";
}

std::vector<MapKind> all_map_kinds() {
  return {MapKind::PHI,   MapKind::THETA,  MapKind::EPSILON, MapKind::PROJ_LIE, MapKind::PROJ_ADJ,
          MapKind::PROJ_I, MapKind::P_KAHLER, MapKind::TRACE, MapKind::CORNER, MapKind::LIFT_P,
          MapKind::THETA_NF, MapKind::BAR_PI, MapKind::BAR_IOTA, MapKind::EMBED_CY};
}

std::optional<MapKind> parse_map_kind(const std::string& name) {
  for (auto k : all_map_kinds())
    if (map_kind_name(k) == name) return k;
  return std::nullopt;
}

ChainMapRep make_phi(const Algebra& a, const ComplexPtr& cl, const ComplexPtr& chh, bool break_sign) {
  expect_kind(cl, "CL", "phi");
  expect_kind(chh, "CHH", "phi");
  return fill_map("PHI", cl, chh, 1, [&](int m) {
    const auto src = cl_basis(a, *cl, m);
    TensorBasis tgt(a.dim(), m);
    SignedArrangements arr(m - 1);
    SparseMatrix out(tgt.size(), src.size());
    std::vector<int> l, w(m);
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, l);
      VectorAccumulator acc;
      w[0] = l[0];
      for (std::size_t k = 0; k < arr.perms.size(); ++k) {
        for (int t = 0; t + 1 < m; ++t) w[1 + t] = l[1 + arr.perms[k][t]];
        int sign = arr.signs[k];
        if (break_sign && m >= 3 && k + 1 == arr.perms.size()) sign = -sign;
        acc.add(static_cast<std::uint32_t>(tgt.encode(w)), sign);
      }
      out.set_column(col, acc.finish());
    }
    return out;
  });
}

ChainMapRep make_theta(const Algebra& a, const ComplexPtr& ce, const ComplexPtr& clambda) {
  expect_kind(ce, "CE", "theta");
  expect_kind(clambda, "CLAMBDA", "theta");
  return fill_map("THETA", ce, clambda, 1, [&](int m) {
    ExteriorBasis src(a.dim(), m);
    CyclicQuotientBasis tgt(a.dim(), m - 1);
    TensorBasis words(a.dim(), m);
    SignedArrangements arr(m - 1);
    SparseMatrix out(tgt.size(), src.size());
    std::vector<int> w(m);
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& s = src.subset(col);
      VectorAccumulator acc;
      w[0] = s[0];
      for (std::size_t k = 0; k < arr.perms.size(); ++k) {
        for (int t = 0; t + 1 < m; ++t) w[1 + t] = s[1 + arr.perms[k][t]];
        auto [sign, idx] = tgt.project(words.encode(w));
        if (sign != 0) acc.add(static_cast<std::uint32_t>(idx), sign * arr.signs[k]);
      }
      out.set_column(col, acc.finish());
    }
    return out;
  });
}

ChainMapRep make_epsilon(const Algebra& a, const ComplexPtr& ce_adj, const ComplexPtr& chh) {
  expect_kind(ce_adj, "CE_ADJ", "epsilon");
  expect_kind(chh, "CHH", "epsilon");
  return fill_map("EPSILON", ce_adj, chh, 0, [&](int n) {
    ExteriorBasis wedge(a.dim(), n);
    TensorBasis tgt(a.dim(), n + 1);
    SignedArrangements arr(n);
    SparseMatrix out(tgt.size(), a.dim() * wedge.size());
    std::vector<int> w(n + 1);
    for (std::size_t h = 0; h < a.dim(); ++h)
      for (std::size_t s = 0; s < wedge.size(); ++s) {
        const auto& sub = wedge.subset(s);
        VectorAccumulator acc;
        w[0] = static_cast<int>(h);
        for (std::size_t k = 0; k < arr.perms.size(); ++k) {
          for (int t = 0; t < n; ++t) w[1 + t] = sub[arr.perms[k][t]];
          acc.add(static_cast<std::uint32_t>(tgt.encode(w)), arr.signs[k]);
        }
        out.set_column(h * wedge.size() + s, acc.finish());
      }
    return out;
  });
}

ChainMapRep make_proj_lie(const Algebra& a, const ComplexPtr& cl, const ComplexPtr& ce) {
  expect_kind(cl, "CL", "proj_lie");
  expect_kind(ce, "CE", "proj_lie");
  return fill_map("PROJ_LIE", cl, ce, 0, [&](int n) {
    const auto src = cl_basis(a, *cl, n);
    ExteriorBasis tgt(a.dim(), n);
    SparseMatrix out(tgt.size(), src.size());
    std::vector<int> l;
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, l);
      const int s = ExteriorBasis::normalize(l);
      if (s != 0) out.set_column(col, unit_vector(static_cast<std::uint32_t>(tgt.index(l)), s));
    }
    return out;
  });
}

ChainMapRep make_proj_adjoint(const Algebra& a, const ComplexPtr& cl, const ComplexPtr& ce_adj) {
  expect_kind(cl, "CL", "proj_adjoint");
  expect_kind(ce_adj, "CE_ADJ", "proj_adjoint");
  return fill_map("PROJ_ADJ", cl, ce_adj, 1, [&](int m) {
    const auto src = cl_basis(a, *cl, m);
    ExteriorBasis wedge(a.dim(), m - 1);
    SparseMatrix out(a.dim() * wedge.size(), src.size());
    std::vector<int> l;
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, l);
      const std::size_t head = static_cast<std::size_t>(l[0]);
      std::vector<int> rest(l.begin() + 1, l.end());
      const int s = ExteriorBasis::normalize(rest);
      if (s != 0) out.set_column(col, unit_vector(static_cast<std::uint32_t>(head * wedge.size() + wedge.index(rest)), s));
    }
    return out;
  });
}

ChainMapRep make_proj_I(const Algebra& a, const ComplexPtr& chh, const ComplexPtr& clambda) {
  expect_kind(chh, "CHH", "proj_I");
  expect_kind(clambda, "CLAMBDA", "proj_I");
  return fill_map("PROJ_I", chh, clambda, 0, [&](int n) {
    CyclicQuotientBasis q(a.dim(), n);
    SparseMatrix out(q.size(), q.ambient());
    for (std::size_t c = 0; c < q.ambient(); ++c) {
      auto [s, idx] = q.project(c);
      if (s != 0) out.set_column(c, unit_vector(static_cast<std::uint32_t>(idx), s));
    }
    return out;
  });
}

KahlerMap make_p_kahler(const Algebra& a, const ComplexPtr& cl) {
  expect_kind(cl, "CL", "p_kahler");
  KahlerMap km;
  km.omega = build_Omega(a, std::max(0, cl->cutoff - 1), &km.modules);
  km.p = fill_map("P_KAHLER", cl, km.omega, 1, [&](int m) {
    const auto& mod = km.modules[m - 1];
    const auto src = cl_basis(a, *cl, m);
    ExteriorBasis wedge(a.dim(), m - 1);
    SparseMatrix out(mod.dim(), src.size());
    std::vector<int> l;
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, l);
      std::vector<int> rest(l.begin() + 1, l.end());
      const int s = ExteriorBasis::normalize(rest);
      if (s == 0) continue;
      const auto amb = unit_vector(static_cast<std::uint32_t>(static_cast<std::size_t>(l[0]) * wedge.size() + wedge.index(rest)), s);
      out.set_column(col, mod.reduce(amb));
    }
    return out;
  });
  return km;
}

SparseMatrix kahler_antisymmetrization(const Algebra& a, const KahlerModule& m) {
  const int n = m.degree;
  ExteriorBasis wedge(a.dim(), n);
  TensorBasis tgt(a.dim(), n + 1);
  SignedArrangements arr(n);
  SparseMatrix out(tgt.size(), m.dim());
  std::vector<int> w(n + 1);
  for (std::size_t q = 0; q < m.dim(); ++q) {
    const std::size_t amb = m.basis[q];
    const auto& sub = wedge.subset(amb % wedge.size());
    VectorAccumulator acc;
    w[0] = static_cast<int>(amb / wedge.size());
    for (std::size_t k = 0; k < arr.perms.size(); ++k) {
      for (int t = 0; t < n; ++t) w[1 + t] = sub[arr.perms[k][t]];
      acc.add(static_cast<std::uint32_t>(tgt.encode(w)), arr.signs[k]);
    }
    out.set_column(q, acc.finish());
  }
  return out;
}

ChainMapRep make_trace(const Algebra& ma, const ComplexPtr& chh_matrix, const ComplexPtr& chh_base) {
  expect_kind(chh_matrix, "CHH", "trace");
  expect_kind(chh_base, "CHH", "trace");
  const auto& md = matrix_data(ma);
  const std::size_t d = md.base->dim();
  return fill_map("TRACE", chh_matrix, chh_base, 0, [&](int n) {
    TensorBasis src(ma.dim(), n + 1), tgt(d, n + 1);
    SparseMatrix out(tgt.size(), src.size());
    std::vector<int> l, b(n + 1);
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, l);
      bool closes = true;
      for (int s = 0; s <= n && closes; ++s) closes = md.col(l[s]) == md.row(l[(s + 1) % (n + 1)]);
      if (!closes) continue;
      for (int s = 0; s <= n; ++s) b[s] = md.entry(l[s]);
      out.set_column(col, unit_vector(static_cast<std::uint32_t>(tgt.encode(b))));
    }
    return out;
  });
}

ChainMapRep make_corner(const Algebra& ma, const ComplexPtr& chh_base, const ComplexPtr& chh_matrix) {
  expect_kind(chh_matrix, "CHH", "corner");
  expect_kind(chh_base, "CHH", "corner");
  const auto& md = matrix_data(ma);
  const std::size_t d = md.base->dim();
  return fill_map("CORNER", chh_base, chh_matrix, 0, [&](int n) {
    TensorBasis src(d, n + 1), tgt(ma.dim(), n + 1);
    SparseMatrix out(tgt.size(), src.size());
    std::vector<int> b, l(n + 1);
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, b);
      for (int s = 0; s <= n; ++s) l[s] = static_cast<int>(md.index(0, 0, b[s]));
      out.set_column(col, unit_vector(static_cast<std::uint32_t>(tgt.encode(l))));
    }
    return out;
  });
}

ChainMapRep make_lift_P(const Algebra& ma, const ComplexPtr& p, const ComplexPtr& cl_matrix) {
  expect_kind(p, "P", "lift_P");
  expect_kind(cl_matrix, "CL", "lift_P");
  const auto& md = matrix_data(ma);
  const std::size_t d = md.base->dim();
  ChainMapRep f{"LIFT_P", p, cl_matrix, -1, 1, {}};
  f.maps.resize(p->cutoff + 1);
  for (int n = 0; n <= p->cutoff && n + 1 <= cl_matrix->cutoff; ++n) {
    if (n + 1 > md.size) break;  // needs n+1 distinct rows
    const auto cycles = full_cycles(n + 1);
    TensorBasis words(d, n + 1);
    const auto tgt = cl_basis(ma, *cl_matrix, n + 1);
    SparseMatrix out(tgt.size(), cycles.size() * words.size());
    std::vector<int> b, l(n + 1);
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (std::size_t code = 0; code < words.size(); ++code) {
        words.decode(code, b);
        for (int s = 0; s <= n; ++s) l[s] = static_cast<int>(md.index(s, cycles[c](s), b[s]));
        auto idx = tgt.index(tgt.encode(l));
        if (!idx) throw std::logic_error("lift_P left the weight-zero summand");
        out.set_column(c * words.size() + code, unit_vector(static_cast<std::uint32_t>(*idx)));
      }
    f.maps[n] = std::move(out);
  }
  return f;
}

ChainMapRep make_theta_nf(const Algebra& ma, const ComplexPtr& cl_matrix, const ComplexPtr& l) {
  expect_kind(cl_matrix, "CL", "theta_nf");
  expect_kind(l, "L", "theta_nf");
  const auto& md = matrix_data(ma);
  const std::size_t d = md.base->dim();
  return fill_map("THETA_NF", cl_matrix, l, 0, [&](int n) {
    const auto src = cl_basis(ma, *cl_matrix, n);
    TensorBasis words(d, n);
    SparseMatrix out(l->dim(n), src.size());
    if (n == 0) {
      out.set_column(0, unit_vector(0));
      return out;
    }
    std::vector<int> letters, b(n), rel(md.size), images(n);
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, letters);
      std::fill(rel.begin(), rel.end(), -1);
      bool pattern = true;
      for (int s = 0; s < n && pattern; ++s) {
        const int r = md.row(letters[s]);
        if (rel[r] >= 0) pattern = false;
        rel[r] = s;
      }
      for (int s = 0; s < n && pattern; ++s) {
        const int c = rel[md.col(letters[s])];
        if (c < 0) pattern = false;
        images[s] = c;
        b[s] = md.entry(letters[s]);
      }
      if (!pattern) continue;
      std::vector<char> hit(n, 0);
      for (int s = 0; s < n && pattern; ++s) {
        if (hit[images[s]]) pattern = false;
        hit[images[s]] = 1;
      }
      if (!pattern) continue;
      out.set_column(col, unit_vector(static_cast<std::uint32_t>(L_index(Permutation(images), words.encode(b), d))));
    }
    return out;
  });
}

ChainMapRep make_bar_pi(const Algebra& ga, const ComplexPtr& chh, const ComplexPtr& bar) {
  expect_kind(chh, "CHH", "bar_pi");
  expect_kind(bar, "BAR", "bar_pi");
  const std::size_t d = ga.dim();
  return fill_map("BAR_PI", chh, bar, 0, [&](int n) {
    TensorBasis src(d, n + 1), tgt(d, n);
    SparseMatrix out(tgt.size(), src.size());
    std::vector<int> g;
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, g);
      std::vector<int> rest(g.begin() + 1, g.end());
      out.set_column(col, unit_vector(static_cast<std::uint32_t>(tgt.encode(rest))));
    }
    return out;
  });
}

ChainMapRep make_bar_iota(const Algebra& ga, const ComplexPtr& bar, const ComplexPtr& chh) {
  expect_kind(chh, "CHH", "bar_iota");
  expect_kind(bar, "BAR", "bar_iota");
  if (!ga.group()) throw AlgebraError("bar_iota needs a group algebra");
  const GroupData& grp = *ga.group();
  const std::size_t d = ga.dim();
  return fill_map("BAR_IOTA", bar, chh, 0, [&](int n) {
    TensorBasis src(d, n), tgt(d, n + 1);
    SparseMatrix out(tgt.size(), src.size());
    std::vector<int> g, w(n + 1);
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, g);
      int prod = grp.identity;
      for (int x : g) prod = grp.mul(prod, x);
      w[0] = grp.inverse[prod];
      for (int s = 0; s < n; ++s) w[1 + s] = g[s];
      out.set_column(col, unit_vector(static_cast<std::uint32_t>(tgt.encode(w))));
    }
    return out;
  });
}

ChainMapRep make_embed_cy(const Algebra& a, const ComplexPtr& chh, const ComplexPtr& p) {
  expect_kind(chh, "CHH", "embed_cy");
  expect_kind(p, "P", "embed_cy");
  return fill_map("EMBED_CY", chh, p, 0, [&](int n) {
    const auto cycles = full_cycles(n + 1);
    const auto tau = Permutation::cyclic_shift(n + 1);
    TensorBasis words(a.dim(), n + 1);
    SparseMatrix out(p->dim(n), words.size());
    for (std::size_t code = 0; code < words.size(); ++code)
      out.set_column(code, unit_vector(static_cast<std::uint32_t>(P_index(cycles, tau, code, a.dim()))));
    return out;
  });
}

ChainMapRep make_trace_phi(const Algebra& ma, const ComplexPtr& cl_matrix, const ComplexPtr& chh_base) {
  expect_kind(cl_matrix, "CL", "trace_phi");
  expect_kind(chh_base, "CHH", "trace_phi");
  const auto& md = matrix_data(ma);
  const std::size_t d = md.base->dim();
  return fill_map("TRACE_PHI", cl_matrix, chh_base, 1, [&](int m) {
    const auto src = cl_basis(ma, *cl_matrix, m);
    TensorBasis tgt(d, m);
    SignedArrangements arr(m - 1);
    SparseMatrix out(tgt.size(), src.size());
    std::vector<int> l, w(m), b(m);
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, l);
      VectorAccumulator acc;
      w[0] = l[0];
      for (std::size_t k = 0; k < arr.perms.size(); ++k) {
        for (int t = 0; t + 1 < m; ++t) w[1 + t] = l[1 + arr.perms[k][t]];
        bool closes = true;
        for (int s = 0; s < m && closes; ++s) closes = md.col(w[s]) == md.row(w[(s + 1) % m]);
        if (!closes) continue;
        for (int s = 0; s < m; ++s) b[s] = md.entry(w[s]);
        acc.add(static_cast<std::uint32_t>(tgt.encode(b)), arr.signs[k]);
      }
      out.set_column(col, acc.finish());
    }
    return out;
  });
}

ChainMapRep make_functorial(const AlgebraMorphism& f, ComplexKind kind, const ComplexPtr& source,
                            const ComplexPtr& target) {
  const Algebra& A = *f.source;
  const Algebra& B = *f.target;
  const std::string name = complex_kind_name(kind);
  expect_kind(source, name, "functorial map");
  expect_kind(target, name, "functorial map");
  if (source->weight_zero != target->weight_zero)
    throw std::invalid_argument("functorial map: weight-zero restriction on one side only");
  const std::string label = name + "(" + f.name + ")";
  switch (kind) {
    case ComplexKind::CL:
      return fill_map(label, source, target, 0, [&](int n) {
        const auto src = cl_basis(A, *source, n);
        const auto tgt = cl_basis(B, *target, n);
        SparseMatrix out(tgt.size(), src.size());
        if (n == 0) {
          out.set_column(0, unit_vector(0));
          return out;
        }
        std::vector<int> l;
        for (std::size_t col = 0; col < src.size(); ++col) {
          src.decode(col, l);
          VectorAccumulator acc;
          expand_tensor(f.matrix, l, [&](const std::vector<int>& w, const Rational& c) {
            auto idx = tgt.index(tgt.encode(w));
            if (!idx) throw std::logic_error(label + " left the weight-zero summand");
            acc.add(static_cast<std::uint32_t>(*idx), c);
          });
          out.set_column(col, acc.finish());
        }
        return out;
      });
    case ComplexKind::CHH:
      return fill_map(label, source, target, 0, [&](int n) {
        TensorBasis src(A.dim(), n + 1), tgt(B.dim(), n + 1);
        SparseMatrix out(tgt.size(), src.size());
        std::vector<int> l;
        for (std::size_t col = 0; col < src.size(); ++col) {
          src.decode(col, l);
          VectorAccumulator acc;
          expand_tensor(f.matrix, l, [&](const std::vector<int>& w, const Rational& c) {
            acc.add(static_cast<std::uint32_t>(tgt.encode(w)), c);
          });
          out.set_column(col, acc.finish());
        }
        return out;
      });
    case ComplexKind::CLAMBDA:
      return fill_map(label, source, target, 0, [&](int n) {
        CyclicQuotientBasis src(A.dim(), n), tgt(B.dim(), n);
        TensorBasis ws(A.dim(), n + 1), wt(B.dim(), n + 1);
        SparseMatrix out(tgt.size(), src.size());
        std::vector<int> l;
        for (std::size_t col = 0; col < src.size(); ++col) {
          ws.decode_code(src.representative(col), l);
          VectorAccumulator acc;
          expand_tensor(f.matrix, l, [&](const std::vector<int>& w, const Rational& c) {
            auto [s, idx] = tgt.project(wt.encode(w));
            if (s != 0) acc.add(static_cast<std::uint32_t>(idx), s * c);
          });
          out.set_column(col, acc.finish());
        }
        return out;
      });
    default:
      throw std::invalid_argument("functorial maps are available for CL, CHH and CLAMBDA only");
  }
}

}  // namespace lhh
