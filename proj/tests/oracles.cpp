#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace oracle {

Dense to_dense(const lhh::SparseMatrix& m) {
  Dense a(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) a[e.index][j] = e.value;
  return a;
}

std::size_t dense_rank(Dense a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t dense_rank(const lhh::SparseMatrix& m) { return dense_rank(to_dense(m)); }

std::size_t truncated_poly_hh(int m, int n) {
  // Multiplication by m x^{m-1} on the basis 1, x, ..., x^{m-1}.
  Dense mult(m, std::vector<Rational>(m, 0));
  mult[m - 1][0] = m;
  auto map_rank = [&](int degree) -> std::size_t {  // rank of the map out of `degree`
    if (degree <= 0) return 0;
    return degree % 2 == 0 ? dense_rank(mult) : 0;
  };
  return static_cast<std::size_t>(m) - map_rank(n) - map_rank(n + 1);
}

std::size_t conjugacy_classes(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  int e = 0;
  for (int g = 0; g < n; ++g)
    if (t[g][0] == 0 && std::all_of(t[g].begin(), t[g].end(), [&, k = 0](int v) mutable { return v == k++; })) e = g;
  std::vector<int> inv(n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (t[g][h] == e) inv[g] = h;
  std::set<std::set<int>> classes;
  for (int x = 0; x < n; ++x) {
    std::set<int> cls;
    for (int g = 0; g < n; ++g) cls.insert(t[t[g][x]][inv[g]]);
    classes.insert(cls);
  }
  return classes.size();
}

std::vector<std::vector<int>> s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

}  // namespace oracle
