#include "doctest.h"
#include "oracles.hpp"

#include "lhh/bases.hpp"
#include "lhh/complexes.hpp"
#include "lhh/permutation.hpp"

#include <algorithm>
#include <numeric>

using namespace lhh;

namespace {

BuildOptions opts(int cutoff, std::size_t bound = 200000) {
  BuildOptions o;
  o.cutoff = cutoff;
  o.max_dim = bound;
  return o;
}

std::vector<std::size_t> hom(const ChainComplex& c) {
  auto t = betti_numbers(c);
  t.betti.pop_back();
  return t.betti;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Brute-force orbit count of A^{(x) m} / (1 - t) with the rotation sign (-1)^{n} per step.
std::size_t cyclic_quotient_oracle(std::size_t d, int n) {
  const int m = n + 1;
  const std::uint64_t total = ipow(d, m);
  std::vector<bool> seen(total, false);
  std::size_t count = 0;
  std::vector<int> letters(m);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    std::uint64_t c = code;
    for (int s = m - 1; s >= 0; --s) letters[s] = static_cast<int>(c % d), c /= d;
    bool killed = false;
    for (int k = 0; k < m; ++k) {
      std::vector<int> r(m);
      for (int s = 0; s < m; ++s) r[(s + k) % m] = letters[s];
      std::uint64_t rc = 0;
      for (int x : r) rc = rc * d + x;
      seen[rc] = true;
      if (k > 0 && r == letters && (n * k) % 2 != 0) killed = true;
    }
    if (!killed) ++count;
  }
  return count;
}

std::uint64_t weight_zero_oracle(int N, int slots) {
  std::uint64_t count = 0;
  const std::uint64_t total = ipow(N * N, slots);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> bal(N, 0);
    std::uint64_t c = code;
    for (int s = 0; s < slots; ++s) {
      const int e = static_cast<int>(c % (N * N));
      c /= N * N;
      ++bal[e / N];
      --bal[e % N];
    }
    if (std::all_of(bal.begin(), bal.end(), [](int b) { return b == 0; })) ++count;
  }
  return count;
}

const std::vector<std::string> kCatalogue = {"rationals", "dual", "truncated_poly:3", "split:2",
                                             "cyclic:2",  "cyclic:3", "s3"};

}  // namespace

TEST_CASE("boundary squares vanish for every complex") {
  for (const auto& spec : kCatalogue) {
    auto a = algebra_from_spec(spec);
    for (auto kind : all_complex_kinds()) {
      if (kind == ComplexKind::BAR && !a->group()) continue;
      int cutoff = a->dim() >= 6 ? 3 : 4;
      if (kind == ComplexKind::L || kind == ComplexKind::P) cutoff = a->dim() >= 3 ? 3 : 4;
      CAPTURE(spec);
      CAPTURE(complex_kind_name(kind));
      auto c = build_complex(kind, *a, opts(cutoff));
      REQUIRE(c->dims.size() == static_cast<std::size_t>(cutoff + 1));
      for (int n = 0; n <= cutoff; ++n) CHECK(c->dims[n] == complex_dimension(kind, *a, n));
      auto r = verify_boundary_squares(*c);
      CHECK_MESSAGE(r.ok, r.witness);
    }
  }
  auto m2 = algebra_from_spec("matrix:2:rationals");
  for (auto kind : {ComplexKind::CL, ComplexKind::CHH, ComplexKind::CLAMBDA, ComplexKind::CE, ComplexKind::CE_ADJ})
    CHECK(verify_boundary_squares(*build_complex(kind, *m2, opts(4))).ok);
}

TEST_CASE("bad build requests") {
  auto dual = algebra_from_spec("dual");
  CHECK_THROWS_AS(build_bar(*dual, opts(3)), AlgebraError);
  BuildOptions w = opts(3);
  w.weight_zero = true;
  CHECK_THROWS_AS(build_CL(*dual, w), AlgebraError);
  CHECK_THROWS_AS(build_complex(ComplexKind::CHH, *algebra_from_spec("matrix:2:rationals"), w), std::invalid_argument);
  auto s3 = algebra_from_spec("s3");
  try {
    build_CHH(*s3, opts(8, 1000));
    FAIL("expected resource bound");
  } catch (const ResourceBoundExceeded& e) {
    CHECK(e.degree() == 3);
    CHECK(e.dim() == 1296);
  }
}

TEST_CASE("cyclic quotient dimensions") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      CyclicQuotientBasis b(d, n);
      CHECK(b.size() == cyclic_quotient_oracle(d, n));
      // (1/m) sum_k (-1)^{nk} d^{gcd(k, m)}
      const int m = n + 1;
      long long s = 0;
      for (int k = 0; k < m; ++k)
        s += ((n * k) % 2 ? -1 : 1) * static_cast<long long>(ipow(d, std::gcd(k, m)));
      CHECK(static_cast<long long>(b.size()) == s / m);
    }
}

TEST_CASE("exterior normalize") {
  std::vector<int> v{2, 0, 1};
  CHECK(ExteriorBasis::normalize(v) == 1);
  CHECK(v == std::vector<int>{0, 1, 2});
  std::vector<int> w{1, 0};
  CHECK(ExteriorBasis::normalize(w) == -1);
  std::vector<int> z{1, 3, 1};
  CHECK(ExteriorBasis::normalize(z) == 0);
  ExteriorBasis e(4, 2);
  CHECK(e.size() == 6);
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(e.index(e.subset(i)) == i);
}

TEST_CASE("weight zero basis") {
  for (int N = 1; N <= 3; ++N)
    for (int slots = 0; slots <= 4; ++slots) {
      if (N == 3 && slots == 4) continue;
      CHECK(weight_zero_count(N, 1, slots) == weight_zero_oracle(N, slots));
    }
  CHECK(weight_zero_count(3, 1, 2) == 15);
  CHECK(weight_zero_count(3, 1, 3) == 93);
  CHECK(weight_zero_count(3, 1, 4) == 639);
  CHECK(weight_zero_count(3, 2, 3) == 93 * 8);
  auto m3 = algebra_from_spec("matrix:3:rationals");
  TensorBasis tb(9, 2, &*m3->matrix());
  CHECK(tb.size() == 15);
  for (std::size_t i = 0; i < tb.size(); ++i) CHECK(tb.index(tb.code(i)) == std::optional<std::size_t>(i));
}

TEST_CASE("Hochschild homology of small algebras") {
  auto dual = algebra_from_spec("dual");
  CHECK(hom(*build_CHH(*dual, opts(4))) == std::vector<std::size_t>{2, 1, 1, 1});
  for (int m = 2; m <= 4; ++m) {
    auto a = algebra_from_spec("truncated_poly:" + std::to_string(m));
    const int cutoff = m == 4 ? 4 : 5;
    auto h = hom(*build_CHH(*a, opts(cutoff)));
    for (int n = 0; n < cutoff; ++n) CHECK(h[n] == oracle::truncated_poly_hh(m, n));
  }
  CHECK(hom(*build_CHH(*algebra_from_spec("rationals"), opts(4))) == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(hom(*build_CHH(*algebra_from_spec("split:2"), opts(4))) == std::vector<std::size_t>{2, 0, 0, 0});
  // Separable and Morita invariant: HH(M_2(Q)) = HH(Q).
  CHECK(hom(*build_CHH(*algebra_from_spec("matrix:2:rationals"), opts(3))) == std::vector<std::size_t>{1, 0, 0});
  auto s3 = algebra_from_spec("s3");
  auto h = hom(*build_CHH(*s3, opts(2)));
  CHECK(h[0] == oracle::conjugacy_classes(oracle::s3_table()));
  CHECK(h[1] == 0);
}

TEST_CASE("cyclic and Lie homology of small algebras") {
  // HC(Q) = Q in even degrees.
  CHECK(hom(*build_Clambda(*algebra_from_spec("rationals"), opts(5))) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  // CL(Q): every bracket vanishes.
  CHECK(hom(*build_CL(*algebra_from_spec("rationals"), opts(4))) == std::vector<std::size_t>{1, 1, 1, 1});
  // CE of an abelian Lie algebra: zero boundaries.
  CHECK(hom(*build_CE(*algebra_from_spec("split:2"), opts(3))) == std::vector<std::size_t>{1, 2, 1});
  // gl_2 = sl_2 + centre: H(gl_2) = Lambda(x_1, x_3) in degrees 0..4.
  CHECK(hom(*build_CE(*algebra_from_spec("matrix:2:rationals"), opts(5))) ==
        std::vector<std::size_t>{1, 1, 0, 1, 1});
}

TEST_CASE("group homology from the bar complex") {
  for (const auto& spec : {"cyclic:2", "cyclic:3", "s3"}) {
    auto g = algebra_from_spec(spec);
    auto h = hom(*build_bar(*g, opts(3)));
    CHECK(h == std::vector<std::size_t>{1, 0, 0});
  }
}

TEST_CASE("permutations and cycle faces") {
  CHECK(symmetric_group(3).size() == 6);
  for (const auto& s : symmetric_group(4)) CHECK(symmetric_group(4)[lex_rank(s)] == s);
  for (int n = 1; n <= 6; ++n) {
    auto u = full_cycles(n);
    std::size_t fact = 1;
    for (int k = 2; k < n; ++k) fact *= k;
    CHECK(u.size() == fact);
    CHECK(std::is_sorted(u.begin(), u.end()));
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(full_cycle_rank(u, u[i]) == i);
  }
  CHECK(Permutation::cyclic_shift(3).to_string() == "[2 3 1]");
  CHECK(Permutation({1, 2, 0}).sign() == 1);
  CHECK(Permutation({1, 0, 2}).sign() == -1);
  // Presimplicial identities d_i d_j = d_{j-1} d_i for i < j on U_{m}, faces indexed 0..m-1.
  for (int m = 3; m <= 5; ++m)
    for (const auto& s : full_cycles(m))
      for (int j = 1; j < m; ++j)
        for (int i = 0; i < j; ++i) {
          CAPTURE(s.to_string());
          CHECK(face_U(face_U(s, j), i) == face_U(face_U(s, i), j - 1));
        }
  for (const auto& s : full_cycles(4))
    for (int k = 0; k < 4; ++k) CHECK(face_U(s, k).is_full_cycle());
}

TEST_CASE("transport terms restrict to full cycles") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& s : full_cycles(n)) {
      const auto terms = transport_terms(s);
      CHECK(terms.size() == static_cast<std::size_t>(n));
      for (const auto& t : terms) CHECK(t.result.is_full_cycle());
    }
}

TEST_CASE("cycle coordinates diagonalize the P boundary") {
  for (const auto& spec : {"rationals", "dual"}) {
    auto a = algebra_from_spec(spec);
    auto p = build_P(*a, opts(4));
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(spec);
      CAPTURE(n);
      auto q_n = P_cycle_coordinates(*a, n);
      auto q_prev = P_cycle_coordinates(*a, n - 1);
      auto lhs = multiply(p->d(n), q_n);
      auto rhs = multiply(q_prev, P_diagonal_boundary(*a, n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("P is a simplicial product with the cycle complex") {
  // With A = Q the complex is k[U_{*+1}] alone.
  auto p = build_P(*algebra_from_spec("rationals"), opts(5));
  auto h = hom(*p);
  CAPTURE(h.size());
  CHECK(h[0] == 1);
  for (std::size_t n = 1; n < h.size(); ++n) CHECK(h[n] == 0);
}
