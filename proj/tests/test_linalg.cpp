#include "doctest.h"
#include "oracles.hpp"

#include "lhh/chain_complex.hpp"
#include "lhh/linalg.hpp"

#include <random>

using namespace lhh;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  SparseMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    SparseVector col;
    for (std::size_t i = 0; i < r; ++i)
      if (rows[i][j] != 0) col.push_back({static_cast<std::uint32_t>(i), rows[i][j]});
    m.set_column(j, col);
  }
  return m;
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density_percent, int rank_cap = -1) {
  std::uniform_int_distribution<int> coeff(-3, 3), pct(0, 99);
  if (rank_cap >= 0) {
    // Product of r x k and k x c random matrices has rank <= k.
    auto left = random_matrix(rng, r, rank_cap, density_percent);
    auto right = random_matrix(rng, rank_cap, c, density_percent);
    return multiply(left, right);
  }
  SparseMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    SparseVector col;
    for (std::size_t i = 0; i < r; ++i)
      if (pct(rng) < density_percent) {
        int v = coeff(rng);
        Rational q(v, 1 + (pct(rng) % 3));
        q.canonicalize();
        if (v != 0) col.push_back({static_cast<std::uint32_t>(i), q});
      }
    m.set_column(j, col);
  }
  return m;
}

}  // namespace

TEST_CASE("rank_kernel_image on small matrices") {
  SUBCASE("zero 3x3") {
    auto r = rank_kernel_image(SparseMatrix(3, 3));
    CHECK(r.rank == 0);
    CHECK(r.kernel.size() == 3);
  }
  SUBCASE("identity 4x4") {
    auto r = rank_kernel_image(SparseMatrix::identity(4));
    CHECK(r.rank == 4);
    CHECK(r.kernel.empty());
  }
  SUBCASE("proportional rows") {
    auto m = from_rows({{1, 2}, {2, 4}});
    auto r = rank_kernel_image(m);
    CHECK(r.rank == 1);
    REQUIRE(r.kernel.size() == 1);
    // kernel spanned by (2, -1): the basis vector is proportional to it
    const auto& k = r.kernel[0];
    REQUIRE(k.size() == 2);
    CHECK(k[0].value == -2 * k[1].value);
    CHECK(m.apply(k).empty());
    REQUIRE(r.image.size() == 1);
    auto sol = r.solver->solve(m.column(1));
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol).size() == 2);
  }
}

TEST_CASE("sparse rank agrees with dense elimination on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 14);
    const std::size_t r = dim(rng), c = dim(rng);
    const int cap = trial % 3 == 0 ? static_cast<int>(std::min(r, c) / 2) : -1;
    auto m = random_matrix(rng, r, c, 20 + trial, cap);
    const auto expected = oracle::dense_rank(m);
    CHECK(rank(m) == expected);
    CHECK(rank(m.transpose()) == expected);
    auto rki = rank_kernel_image(m);
    CHECK(rki.rank == expected);
    CHECK(rki.kernel.size() == c - expected);
    for (const auto& k : rki.kernel) CHECK(m.apply(k).empty());
  }
}

TEST_CASE("echelon solve reproduces combinations") {
  std::mt19937_64 rng(11);
  auto m = random_matrix(rng, 9, 6, 50, 4);
  Echelon e(9, true);
  std::vector<SparseVector> accepted;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (e.insert(m.column(j))) accepted.push_back(m.column(j));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto sol = e.solve(m.column(j));
    REQUIRE(sol.has_value());
    VectorAccumulator acc;
    for (const auto& t : *sol) acc.add_scaled(accepted[t.index], t.value);
    CHECK(same_vector(acc.finish(), m.column(j)));
  }
  CHECK(e.solve(unit_vector(0)).has_value() == e.reduce(unit_vector(0)).empty());
}

TEST_CASE("boundary square check catches a perturbed entry") {
  ChainComplex c;
  c.kind = "TEST";
  c.cutoff = 2;
  c.dims = {1, 2, 1};
  c.boundary.push_back(SparseMatrix(0, 1));
  c.boundary.push_back(from_rows({{1, 1}}));
  c.boundary.push_back(from_rows({{1}, {-1}}));
  CHECK(verify_boundary_squares(c).ok);
  c.boundary[2] = from_rows({{1}, {2}});
  auto r = verify_boundary_squares(c);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("column 0") != std::string::npos);

  ChainComplex one;
  one.kind = "ONE";
  one.cutoff = 1;
  one.dims = {1, 1};
  one.boundary = {SparseMatrix(0, 1), from_rows({{5}})};
  CHECK(verify_boundary_squares(one).ok);
}

TEST_CASE("exactness check") {
  auto id = SparseMatrix::identity(2);
  auto rep = exactness_check({id, id, id});
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.nodes[0].composite_zero);

  // 0 -> Q -> Q^2 -> Q -> 0, with inclusion then projection
  auto inc = from_rows({{1}, {0}});
  auto proj = from_rows({{0, 1}});
  auto ses = exactness_check({SparseMatrix(1, 0), inc, proj, SparseMatrix(0, 1)});
  CHECK(ses.ok());
  CHECK(ses.nodes.size() == 3);
  CHECK_THROWS_AS(exactness_check({inc, inc}), std::invalid_argument);
}
