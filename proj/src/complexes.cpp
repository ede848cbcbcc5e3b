#include "lhh/complexes.hpp"

#include "lhh/bases.hpp"
#include "lhh/cache.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace lhh {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t d, int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p = sat_mul(p, d);
  return p;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = sat_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// dim A^{(x) m} / (1 - t) = (1/m) sum_k (-1)^{(m-1)k} d^{gcd(k, m)}.
std::uint64_t cyclic_quotient_dim(std::uint64_t d, int n) {
  const int m = n + 1;
  __int128 total = 0;
  for (int k = 0; k < m; ++k) {
    __int128 term = 1;
    for (int e = std::gcd(k, m); e > 0; --e) term *= d;
    total += ((static_cast<long>(n) * k) % 2 == 1) ? -term : term;
  }
  return static_cast<std::uint64_t>(total / m);
}

const MatrixData* weight_zero_data(const Algebra& a, bool weight_zero) {
  if (!weight_zero) return nullptr;
  if (!a.matrix()) throw AlgebraError("weight-zero restriction needs a matrix algebra, got " + a.name());
  return &*a.matrix();
}

std::string cache_kind(ComplexKind kind, bool weight_zero) {
  return complex_kind_name(kind) + (weight_zero ? "_W0" : "");
}

/// Fills dims, checks the resource bound, then assembles boundaries degree by degree (through the cache).
ComplexPtr assemble(ComplexKind kind, const Algebra& a, const BuildOptions& opts, bool weight_zero,
                    const std::function<std::vector<std::size_t>()>& make_dims,
                    const std::function<SparseMatrix(int)>& make_boundary) {
  if (opts.cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  const std::string name = complex_kind_name(kind);
  for (int n = 0; n <= opts.cutoff; ++n) {
    const auto dim = complex_dimension(kind, a, n, weight_zero);
    if (dim > opts.max_dim) throw ResourceBoundExceeded(name, n, dim, opts.max_dim);
  }
  auto c = std::make_shared<ChainComplex>();
  c->kind = name;
  c->cutoff = opts.cutoff;
  c->weight_zero = weight_zero;
  c->dims = make_dims();
  c->boundary.push_back(SparseMatrix(0, c->dims[0]));
  const std::string key = cache_kind(kind, weight_zero);
  for (int n = 1; n <= opts.cutoff; ++n) {
    std::optional<SparseMatrix> m;
    if (opts.cache) {
      m = opts.cache->load(a.content_hash(), key, n);
      if (m && (m->rows() != c->dims[n - 1] || m->cols() != c->dims[n])) m.reset();
    }
    if (!m) {
      m = make_boundary(n);
      if (opts.cache) opts.cache->store(a.content_hash(), key, n, *m);
    }
    c->boundary.push_back(std::move(*m));
  }
  return c;
}

/// letters with slot i replaced by `value` and slot j removed, encoded in base d.
std::uint64_t contract_code(const std::vector<int>& letters, int i, int j, int value, std::size_t d) {
  std::uint64_t code = 0;
  for (int s = 0; s < static_cast<int>(letters.size()); ++s) {
    if (s == j) continue;
    code = code * d + static_cast<std::uint64_t>(s == i ? value : letters[s]);
  }
  return code;
}

std::vector<std::size_t> tensor_dims(const std::vector<TensorBasis>& bases) {
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.size());
  return dims;
}

}  // namespace

std::string complex_kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::CL: return "CL";
    case ComplexKind::CHH: return "CHH";
    case ComplexKind::CLAMBDA: return "CLAMBDA";
    case ComplexKind::CE: return "CE";
    case ComplexKind::CE_ADJ: return "CE_ADJ";
    case ComplexKind::BAR: return "BAR";
    case ComplexKind::L: return "L";
    case ComplexKind::P: return "P";
  }
  return "?";
}

std::optional<ComplexKind> parse_complex_kind(const std::string& name) {
  for (auto k : all_complex_kinds())
    if (complex_kind_name(k) == name) return k;
  return std::nullopt;
}

std::vector<ComplexKind> all_complex_kinds() {
  return {ComplexKind::CL, ComplexKind::CHH, ComplexKind::CLAMBDA, ComplexKind::CE,
          ComplexKind::CE_ADJ, ComplexKind::BAR, ComplexKind::L, ComplexKind::P};
}

ResourceBoundExceeded::ResourceBoundExceeded(std::string kind, int degree, std::uint64_t dim, std::size_t bound)
    : std::runtime_error(kind + " degree " + std::to_string(degree) + " has dimension " +
                         (dim == kSaturated ? std::string("> 2^64") : std::to_string(dim)) +
                         ", above the bound " + std::to_string(bound)),
      kind_(std::move(kind)),
      degree_(degree),
      dim_(dim) {}

std::uint64_t complex_dimension(ComplexKind kind, const Algebra& a, int n, bool weight_zero) {
  const std::uint64_t d = a.dim();
  switch (kind) {
    case ComplexKind::CL:
      if (n == 0) return 1;
      if (weight_zero) {
        const auto* md = weight_zero_data(a, true);
        return weight_zero_count(md->size, md->base->dim(), n);
      }
      return sat_pow(d, n);
    case ComplexKind::CHH: return sat_pow(d, n + 1);
    case ComplexKind::CLAMBDA: return sat_pow(d, n + 1) == kSaturated ? kSaturated : cyclic_quotient_dim(d, n);
    case ComplexKind::CE: return binomial(d, n);
    case ComplexKind::CE_ADJ: return d * binomial(d, n);
    case ComplexKind::BAR:
      if (!a.group()) throw AlgebraError("BAR needs a group algebra, got " + a.name());
      return sat_pow(d, n);
    case ComplexKind::L: return sat_mul(factorial(n), sat_pow(d, n));
    case ComplexKind::P: return sat_mul(factorial(n), sat_pow(d, n + 1));
  }
  return 0;
}

ComplexPtr build_CL(const Algebra& a, const BuildOptions& opts) {
  const MatrixData* w0 = weight_zero_data(a, opts.weight_zero);
  std::vector<TensorBasis> bases;
  auto dims = [&] {
    for (int n = 0; n <= opts.cutoff; ++n) bases.emplace_back(a.dim(), n, n == 0 ? nullptr : w0);
    return tensor_dims(bases);
  };
  auto boundary = [&](int n) {
    const auto& src = bases[n];
    const auto& tgt = bases[n - 1];
    SparseMatrix m(tgt.size(), src.size());
    if (n == 1) return m;
    std::vector<int> letters;
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, letters);
      VectorAccumulator acc;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const int sign = (j % 2 == 1) ? 1 : -1;
          for (const auto& e : a.bracket(letters[i], letters[j])) {
            auto idx = tgt.index(contract_code(letters, i, j, static_cast<int>(e.index), a.dim()));
            if (!idx) throw std::logic_error("CL boundary left the weight-zero summand");
            acc.add(static_cast<std::uint32_t>(*idx), sign * e.value);
          }
        }
      m.set_column(col, acc.finish());
    }
    return m;
  };
  return assemble(ComplexKind::CL, a, opts, opts.weight_zero, dims, boundary);
}

ComplexPtr build_CHH(const Algebra& a, const BuildOptions& opts) {
  const std::size_t d = a.dim();
  auto dims = [&] {
    std::vector<std::size_t> out;
    for (int n = 0; n <= opts.cutoff; ++n) out.push_back(sat_pow(d, n + 1));
    return out;
  };
  auto boundary = [&](int n) {
    TensorBasis src(d, n + 1), tgt(d, n);
    SparseMatrix m(tgt.size(), src.size());
    std::vector<int> letters, wrapped(n);
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, letters);
      VectorAccumulator acc;
      for (int i = 0; i < n; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& e : a.product(letters[i], letters[i + 1]))
          acc.add(static_cast<std::uint32_t>(contract_code(letters, i, i + 1, static_cast<int>(e.index), d)),
                  sign * e.value);
      }
      const int sign = (n % 2 == 0) ? 1 : -1;
      for (int s = 1; s < n; ++s) wrapped[s] = letters[s];
      for (const auto& e : a.product(letters[n], letters[0])) {
        wrapped[0] = static_cast<int>(e.index);
        acc.add(static_cast<std::uint32_t>(tgt.encode(wrapped)), sign * e.value);
      }
      m.set_column(col, acc.finish());
    }
    return m;
  };
  return assemble(ComplexKind::CHH, a, opts, false, dims, boundary);
}

ComplexPtr build_Clambda(const Algebra& a, const BuildOptions& opts) {
  const std::size_t d = a.dim();
  std::vector<CyclicQuotientBasis> bases;
  auto dims = [&] {
    std::vector<std::size_t> out;
    for (int n = 0; n <= opts.cutoff; ++n) {
      bases.emplace_back(d, n);
      out.push_back(bases.back().size());
    }
    return out;
  };
  auto boundary = [&](int n) {
    const auto& src = bases[n];
    const auto& tgt = bases[n - 1];
    TensorBasis tsrc(d, n + 1), ttgt(d, n);
    SparseMatrix m(tgt.size(), src.size());
    std::vector<int> letters, wrapped(n);
    for (std::size_t col = 0; col < src.size(); ++col) {
      tsrc.decode_code(src.representative(col), letters);
      VectorAccumulator acc;
      auto add = [&](std::uint64_t code, const Rational& v) {
        auto [s, idx] = tgt.project(code);
        if (s != 0) acc.add(static_cast<std::uint32_t>(idx), s * v);
      };
      for (int i = 0; i < n; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& e : a.product(letters[i], letters[i + 1]))
          add(contract_code(letters, i, i + 1, static_cast<int>(e.index), d), sign * e.value);
      }
      const int sign = (n % 2 == 0) ? 1 : -1;
      for (int s = 1; s < n; ++s) wrapped[s] = letters[s];
      for (const auto& e : a.product(letters[n], letters[0])) {
        wrapped[0] = static_cast<int>(e.index);
        add(ttgt.encode(wrapped), sign * e.value);
      }
      m.set_column(col, acc.finish());
    }
    return m;
  };
  return assemble(ComplexKind::CLAMBDA, a, opts, false, dims, boundary);
}

ComplexPtr build_CE(const Algebra& a, const BuildOptions& opts) {
  const std::size_t d = a.dim();
  std::vector<ExteriorBasis> bases;
  auto dims = [&] {
    std::vector<std::size_t> out;
    for (int n = 0; n <= opts.cutoff; ++n) {
      bases.emplace_back(d, n);
      out.push_back(bases.back().size());
    }
    return out;
  };
  auto boundary = [&](int n) {
    const auto& src = bases[n];
    const auto& tgt = bases[n - 1];
    SparseMatrix m(tgt.size(), src.size());
    if (n == 1) return m;
    std::vector<int> word;
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& s = src.subset(col);
      VectorAccumulator acc;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const int sign = (j % 2 == 1) ? 1 : -1;
          for (const auto& e : a.bracket(s[i], s[j])) {
            word.clear();
            for (int t = 0; t < n; ++t)
              if (t != j) word.push_back(t == i ? static_cast<int>(e.index) : s[t]);
            const int ws = ExteriorBasis::normalize(word);
            if (ws != 0) acc.add(static_cast<std::uint32_t>(tgt.index(word)), sign * ws * e.value);
          }
        }
      m.set_column(col, acc.finish());
    }
    return m;
  };
  return assemble(ComplexKind::CE, a, opts, false, dims, boundary);
}

ComplexPtr build_CE_adjoint(const Algebra& a, const BuildOptions& opts) {
  const std::size_t d = a.dim();
  std::vector<ExteriorBasis> bases;
  auto dims = [&] {
    std::vector<std::size_t> out;
    for (int n = 0; n <= opts.cutoff; ++n) {
      bases.emplace_back(d, n);
      out.push_back(d * bases.back().size());
    }
    return out;
  };
  auto boundary = [&](int n) {
    const auto& src = bases[n];
    const auto& tgt = bases[n - 1];
    SparseMatrix m(d * tgt.size(), d * src.size());
    std::vector<int> word;
    for (std::size_t a0 = 0; a0 < d; ++a0)
      for (std::size_t w = 0; w < src.size(); ++w) {
        // Full word (a_0, a_1, ..., a_n); the wedge part is slots 1..n.
        std::vector<int> s{static_cast<int>(a0)};
        for (int v : src.subset(w)) s.push_back(v);
        VectorAccumulator acc;
        for (int i = 0; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            const int sign = (j % 2 == 1) ? 1 : -1;
            for (const auto& e : a.bracket(s[i], s[j])) {
              word.clear();
              for (int t = 1; t <= n; ++t)
                if (t != j) word.push_back(t == i ? static_cast<int>(e.index) : s[t]);
              const int ws = ExteriorBasis::normalize(word);
              if (ws == 0) continue;
              const std::size_t head = (i == 0) ? e.index : a0;
              acc.add(static_cast<std::uint32_t>(head * tgt.size() + tgt.index(word)), sign * ws * e.value);
            }
          }
        m.set_column(a0 * src.size() + w, acc.finish());
      }
    return m;
  };
  return assemble(ComplexKind::CE_ADJ, a, opts, false, dims, boundary);
}

ComplexPtr build_bar(const Algebra& a, const BuildOptions& opts) {
  if (!a.group()) throw AlgebraError("BAR needs a group algebra, got " + a.name());
  const GroupData& g = *a.group();
  const std::size_t order = static_cast<std::size_t>(g.order());
  auto dims = [&] {
    std::vector<std::size_t> out;
    for (int n = 0; n <= opts.cutoff; ++n) out.push_back(sat_pow(order, n));
    return out;
  };
  auto boundary = [&](int n) {
    TensorBasis src(order, n), tgt(order, n - 1);
    SparseMatrix m(tgt.size(), src.size());
    std::vector<int> letters, face;
    for (std::size_t col = 0; col < src.size(); ++col) {
      src.decode(col, letters);
      VectorAccumulator acc;
      face.assign(letters.begin() + 1, letters.end());
      acc.add(static_cast<std::uint32_t>(tgt.encode(face)), 1);
      for (int i = 1; i < n; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        acc.add(static_cast<std::uint32_t>(contract_code(letters, i - 1, i, g.mul(letters[i - 1], letters[i]), order)),
                sign);
      }
      face.assign(letters.begin(), letters.end() - 1);
      acc.add(static_cast<std::uint32_t>(tgt.encode(face)), (n % 2 == 0) ? 1 : -1);
      m.set_column(col, acc.finish());
    }
    return m;
  };
  return assemble(ComplexKind::BAR, a, opts, false, dims, boundary);
}

std::size_t L_index(const Permutation& sigma, std::uint64_t tensor_code, std::size_t d) {
  return lex_rank(sigma) * static_cast<std::size_t>(sat_pow(d, sigma.size())) + static_cast<std::size_t>(tensor_code);
}

std::size_t P_index(const std::vector<Permutation>& cycles, const Permutation& sigma, std::uint64_t tensor_code,
                    std::size_t d) {
  return full_cycle_rank(cycles, sigma) * static_cast<std::size_t>(sat_pow(d, sigma.size())) +
         static_cast<std::size_t>(tensor_code);
}

namespace {

/// Transported boundary on the span of `perms` (each of size m) into perms of size m-1.
SparseMatrix transported_boundary(const Algebra& a, const std::vector<Permutation>& perms,
                                  const std::function<std::size_t(const Permutation&)>& target_rank,
                                  std::size_t target_dim) {
  const std::size_t d = a.dim();
  const int m = perms.empty() ? 0 : perms.front().size();
  const std::size_t block = static_cast<std::size_t>(sat_pow(d, m));
  const std::size_t target_block = static_cast<std::size_t>(sat_pow(d, m - 1));
  SparseMatrix out(target_dim, perms.size() * block);
  TensorBasis tb(d, m);
  std::vector<int> letters;
  for (std::size_t p = 0; p < perms.size(); ++p) {
    const auto terms = transport_terms(perms[p]);
    std::vector<std::size_t> offsets;
    for (const auto& t : terms) offsets.push_back(target_rank(t.result) * target_block);
    for (std::size_t c = 0; c < block; ++c) {
      tb.decode_code(c, letters);
      VectorAccumulator acc;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        const auto& prod = t.swapped ? a.product(letters[t.slot_j], letters[t.slot_i])
                                     : a.product(letters[t.slot_i], letters[t.slot_j]);
        for (const auto& e : prod)
          acc.add(static_cast<std::uint32_t>(offsets[k] + contract_code(letters, t.slot_i, t.slot_j,
                                                                         static_cast<int>(e.index), d)),
                  t.sign * e.value);
      }
      out.set_column(p * block + c, acc.finish());
    }
  }
  return out;
}

}  // namespace

ComplexPtr build_L(const Algebra& a, const BuildOptions& opts) {
  const std::size_t d = a.dim();
  auto dims = [&] {
    std::vector<std::size_t> out;
    for (int n = 0; n <= opts.cutoff; ++n) out.push_back(factorial(n) * sat_pow(d, n));
    return out;
  };
  auto boundary = [&](int n) {
    const std::size_t rows = factorial(n - 1) * sat_pow(d, n - 1);
    if (n == 1) return SparseMatrix(rows, d);
    return transported_boundary(a, symmetric_group(n), [](const Permutation& s) { return lex_rank(s); }, rows);
  };
  return assemble(ComplexKind::L, a, opts, false, dims, boundary);
}

ComplexPtr build_P(const Algebra& a, const BuildOptions& opts) {
  const std::size_t d = a.dim();
  auto dims = [&] {
    std::vector<std::size_t> out;
    for (int n = 0; n <= opts.cutoff; ++n) out.push_back(factorial(n) * sat_pow(d, n + 1));
    return out;
  };
  auto boundary = [&](int n) {
    const auto lower = full_cycles(n);
    const std::size_t rows = lower.size() * sat_pow(d, n);
    return transported_boundary(a, full_cycles(n + 1),
                                [&](const Permutation& s) { return full_cycle_rank(lower, s); }, rows);
  };
  return assemble(ComplexKind::P, a, opts, false, dims, boundary);
}

ComplexPtr build_complex(ComplexKind kind, const Algebra& a, const BuildOptions& opts) {
  if (opts.weight_zero && kind != ComplexKind::CL)
    throw std::invalid_argument("weight-zero restriction is only available for CL");
  switch (kind) {
    case ComplexKind::CL: return build_CL(a, opts);
    case ComplexKind::CHH: return build_CHH(a, opts);
    case ComplexKind::CLAMBDA: return build_Clambda(a, opts);
    case ComplexKind::CE: return build_CE(a, opts);
    case ComplexKind::CE_ADJ: return build_CE_adjoint(a, opts);
    case ComplexKind::BAR: return build_bar(a, opts);
    case ComplexKind::L: return build_L(a, opts);
    case ComplexKind::P: return build_P(a, opts);
  }
  throw std::logic_error("unknown complex kind");
}

std::vector<std::string> basis_labels(ComplexKind kind, const Algebra& a, int n, bool weight_zero) {
  const std::size_t d = a.dim();
  std::vector<std::string> out;
  std::vector<int> letters;
  auto wedge = [&](const std::vector<int>& s) {
    std::string r;
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "^" : "") + a.basis_names()[s[i]];
    return r.empty() ? std::string("1") : r;
  };
  switch (kind) {
    case ComplexKind::CL: {
      if (n == 0) return {"1"};
      TensorBasis tb(d, n, weight_zero_data(a, weight_zero));
      for (std::size_t i = 0; i < tb.size(); ++i) {
        tb.decode(i, letters);
        out.push_back(tensor_label(a, letters));
      }
      break;
    }
    case ComplexKind::CHH: {
      TensorBasis tb(d, n + 1);
      for (std::size_t i = 0; i < tb.size(); ++i) {
        tb.decode(i, letters);
        out.push_back(tensor_label(a, letters));
      }
      break;
    }
    case ComplexKind::CLAMBDA: {
      CyclicQuotientBasis q(d, n);
      TensorBasis tb(d, n + 1);
      for (std::size_t i = 0; i < q.size(); ++i) {
        tb.decode_code(q.representative(i), letters);
        out.push_back("[" + tensor_label(a, letters) + "]");
      }
      break;
    }
    case ComplexKind::CE: {
      ExteriorBasis eb(d, n);
      for (std::size_t i = 0; i < eb.size(); ++i) out.push_back(wedge(eb.subset(i)));
      break;
    }
    case ComplexKind::CE_ADJ: {
      ExteriorBasis eb(d, n);
      for (std::size_t h = 0; h < d; ++h)
        for (std::size_t i = 0; i < eb.size(); ++i) out.push_back(a.basis_names()[h] + "(x)" + wedge(eb.subset(i)));
      break;
    }
    case ComplexKind::BAR: {
      if (!a.group()) throw AlgebraError("BAR needs a group algebra, got " + a.name());
      if (n == 0) return {"()"};
      TensorBasis tb(d, n);
      for (std::size_t i = 0; i < tb.size(); ++i) {
        tb.decode(i, letters);
        out.push_back(tensor_label(a, letters));
      }
      break;
    }
    case ComplexKind::L:
    case ComplexKind::P: {
      const int m = kind == ComplexKind::L ? n : n + 1;
      const auto perms = kind == ComplexKind::L ? symmetric_group(m) : full_cycles(m);
      TensorBasis tb(d, m);
      for (const auto& s : perms)
        for (std::size_t i = 0; i < tb.size(); ++i) {
          tb.decode(i, letters);
          out.push_back(s.to_string() + "(x)" + tensor_label(a, letters));
        }
      break;
    }
  }
  return out;
}

SparseMatrix P_cycle_coordinates(const Algebra& a, int n) {
  const std::size_t d = a.dim();
  const auto cycles = full_cycles(n + 1);
  TensorBasis tb(d, n + 1);
  SparseMatrix q(cycles.size() * tb.size(), cycles.size() * tb.size());
  std::vector<int> c, slots(n + 1);
  for (std::size_t p = 0; p < cycles.size(); ++p) {
    const auto order = cycle_order(cycles[p]);
    const int eps = cycle_order_sign(cycles[p]);
    for (std::size_t code = 0; code < tb.size(); ++code) {
      tb.decode(code, c);
      for (int k = 0; k <= n; ++k) slots[order[k]] = c[k];
      q.set_column(p * tb.size() + code,
                   unit_vector(static_cast<std::uint32_t>(p * tb.size() + tb.encode(slots)), eps));
    }
  }
  return q;
}

SparseMatrix P_diagonal_boundary(const Algebra& a, int n) {
  if (n < 1) throw std::out_of_range("P_diagonal_boundary: degree must be positive");
  const std::size_t d = a.dim();
  const auto cycles = full_cycles(n + 1);
  const auto lower = full_cycles(n);
  TensorBasis src(d, n + 1), tgt(d, n);
  SparseMatrix out(lower.size() * tgt.size(), cycles.size() * src.size());
  std::vector<int> c, wrapped(n);
  for (std::size_t p = 0; p < cycles.size(); ++p) {
    std::vector<std::size_t> offsets;
    for (int k = 0; k <= n; ++k) offsets.push_back(full_cycle_rank(lower, face_U(cycles[p], k)) * tgt.size());
    for (std::size_t code = 0; code < src.size(); ++code) {
      src.decode(code, c);
      VectorAccumulator acc;
      for (int k = 0; k < n; ++k) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        for (const auto& e : a.product(c[k], c[k + 1]))
          acc.add(static_cast<std::uint32_t>(offsets[k] + contract_code(c, k, k + 1, static_cast<int>(e.index), d)),
                  sign * e.value);
      }
      const int sign = (n % 2 == 0) ? 1 : -1;
      for (int s = 1; s < n; ++s) wrapped[s] = c[s];
      for (const auto& e : a.product(c[n], c[0])) {
        wrapped[0] = static_cast<int>(e.index);
        acc.add(static_cast<std::uint32_t>(offsets[n] + tgt.encode(wrapped)), sign * e.value);
      }
      out.set_column(p * src.size() + code, acc.finish());
    }
  }
  return out;
}

}  // namespace lhh
