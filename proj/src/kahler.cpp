#include "lhh/kahler.hpp"

#include "lhh/bases.hpp"

namespace lhh {

SparseVector KahlerModule::reduce(const SparseVector& v) const {
  SparseVector out;
  for (const auto& e : relations->reduce(v)) {
    const long q = quotient_index[e.index];
    if (q < 0) throw std::logic_error("Kahler reduction left a pivot coordinate");
    out.push_back({static_cast<std::uint32_t>(q), e.value});
  }
  return out;
}

KahlerModule kahler_module(const Algebra& a, int n) {
  if (!a.is_commutative()) throw AlgebraError("Kahler differentials need a commutative algebra, got " + a.name());
  if (n < 0) throw std::invalid_argument("kahler_module: negative degree");
  const std::size_t d = a.dim();
  ExteriorBasis top(d, n);
  KahlerModule m;
  m.degree = n;
  m.ambient = d * top.size();
  auto echelon = std::make_shared<Echelon>(m.ambient);
  if (n >= 1) {
    ExteriorBasis rest(d, n - 1);
    std::vector<int> word;
    // coefficient vector (x) de_k ^ omega
    auto add_term = [&](VectorAccumulator& acc, const SparseVector& head, int k, const std::vector<int>& omega,
                        const Rational& scale) {
      word.assign(1, k);
      word.insert(word.end(), omega.begin(), omega.end());
      const int s = ExteriorBasis::normalize(word);
      if (s == 0) return;
      const std::size_t w = top.index(word);
      for (const auto& h : head) acc.add(static_cast<std::uint32_t>(h.index * top.size() + w), scale * s * h.value);
    };
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
          for (std::size_t t = 0; t < rest.size(); ++t) {
            const auto& omega = rest.subset(t);
            VectorAccumulator acc;
            const auto head_c = unit_vector(static_cast<std::uint32_t>(c));
            for (const auto& e : a.product(i, j)) add_term(acc, head_c, static_cast<int>(e.index), omega, e.value);
            add_term(acc, a.product(c, i), static_cast<int>(j), omega, -1);
            add_term(acc, a.product(c, j), static_cast<int>(i), omega, -1);
            echelon->insert(acc.finish());
          }
  }
  m.quotient_index.assign(m.ambient, -1);
  for (std::size_t k = 0; k < m.ambient; ++k)
    if (!echelon->is_pivot(static_cast<std::uint32_t>(k))) {
      m.quotient_index[k] = static_cast<long>(m.basis.size());
      m.basis.push_back(static_cast<std::uint32_t>(k));
    }
  m.relations = std::move(echelon);
  return m;
}

ComplexPtr build_Omega(const Algebra& a, int cutoff, std::vector<KahlerModule>* modules) {
  auto c = std::make_shared<ChainComplex>();
  c->kind = "OMEGA";
  c->cutoff = cutoff;
  for (int n = 0; n <= cutoff; ++n) {
    auto m = kahler_module(a, n);
    c->dims.push_back(m.dim());
    if (modules) modules->push_back(std::move(m));
  }
  c->boundary.push_back(SparseMatrix(0, c->dims[0]));
  for (int n = 1; n <= cutoff; ++n) c->boundary.push_back(SparseMatrix(c->dims[n - 1], c->dims[n]));
  return c;
}

std::vector<std::string> kahler_labels(const Algebra& a, const KahlerModule& m) {
  ExteriorBasis top(a.dim(), m.degree);
  std::vector<std::string> out;
  for (auto k : m.basis) {
    std::string s = a.basis_names()[k / top.size()];
    for (int v : top.subset(k % top.size())) s += " d" + a.basis_names()[v];
    out.push_back(s);
  }
  return out;
}

}  // namespace lhh
