#include "doctest.h"
#include "oracles.hpp"

#include "lhh/algebra.hpp"
#include "lhh/algebra_io.hpp"

#include <random>

using namespace lhh;

namespace {

AlgebraElement basis(const Algebra& a, const std::string& name) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis_names()[i] == name) return unit_vector(static_cast<std::uint32_t>(i));
  FAIL("no basis element " << name);
  return {};
}

AlgebraElement random_element(const Algebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  VectorAccumulator acc;
  for (std::size_t i = 0; i < a.dim(); ++i) acc.add(static_cast<std::uint32_t>(i), c(rng));
  return acc.finish();
}

std::vector<std::string> builtin_specs() {
  return {"rationals", "dual", "truncated_poly:3", "split:2", "split:3", "cyclic:2", "cyclic:3", "s3", "trivial",
          "matrix:2:rationals", "matrix:3:rationals", "matrix:2:dual"};
}

}  // namespace

TEST_CASE("multiply and bracket examples") {
  auto dual = builtin_algebra("dual");
  auto eps = basis(*dual, "eps");
  CHECK(multiply(*dual, eps, eps).empty());

  auto m2 = algebra_from_spec("matrix:2:rationals");
  auto e11 = basis(*m2, "E11[1]"), e12 = basis(*m2, "E12[1]"), e21 = basis(*m2, "E21[1]"), e22 = basis(*m2, "E22[1]");
  CHECK(same_vector(multiply(*m2, e11, e12), e12));
  CHECK(same_vector(multiply(*m2, e12, e21), e11));
  CHECK(same_vector(bracket(*m2, e12, e21), axpy(e11, -1, e22)));
  CHECK(same_vector(bracket(*m2, e11, e12), e12));

  auto split = builtin_algebra("split", {2});
  CHECK(multiply(*split, basis(*split, "e1"), basis(*split, "e2")).empty());
  CHECK_THROWS_AS(multiply(*split, unit_vector(5), unit_vector(0)), std::exception);
}

TEST_CASE("builtin catalogue is valid") {
  for (const auto& spec : builtin_specs()) {
    CAPTURE(spec);
    auto a = algebra_from_spec(spec);
    CHECK(validate_algebra(*a).ok);
  }
  auto dual = builtin_algebra("dual");
  CHECK(dual->dim() == 2);
  CHECK(dual->basis_names() == std::vector<std::string>{"1", "eps"});
  CHECK(builtin_algebra("truncated_poly", {3})->is_commutative());
  CHECK(builtin_algebra("split", {2})->is_commutative());
  auto c2 = builtin_algebra("cyclic", {2});
  CHECK(c2->dim() == 2);
  auto g = basis(*c2, "g");
  CHECK(same_vector(multiply(*c2, g, g), c2->unit()));
  CHECK_FALSE(builtin_algebra("s3")->is_commutative());
  CHECK(algebra_from_spec("matrix:2:rationals")->dim() == 4);
  CHECK(algebra_from_spec("matrix:2:dual")->dim() == 8);
  CHECK_THROWS_AS(algebra_from_spec("nonsense"), AlgebraError);
  CHECK_THROWS_AS(algebra_from_spec("split:0"), AlgebraError);
  CHECK_THROWS_AS(builtin_algebra("split", {-1}), AlgebraError);
  CHECK(builtin_catalogue().size() >= 6);
}

TEST_CASE("associativity and bracket identities on random elements") {
  std::mt19937_64 rng(42);
  for (const auto& spec : builtin_specs()) {
    CAPTURE(spec);
    auto a = algebra_from_spec(spec);
    for (int t = 0; t < 10; ++t) {
      auto x = random_element(*a, rng), y = random_element(*a, rng), z = random_element(*a, rng);
      CHECK(same_vector(multiply(*a, multiply(*a, x, y), z), multiply(*a, x, multiply(*a, y, z))));
      CHECK(bracket(*a, x, x).empty());
      CHECK(same_vector(bracket(*a, x, y), scaled(bracket(*a, y, x), -1)));
    }
  }
}

TEST_CASE("elementary matrix bracket formula") {
  for (int N = 1; N <= 3; ++N)
    for (const char* base_spec : {"rationals", "dual"}) {
      auto base = algebra_from_spec(base_spec);
      auto m = matrix_algebra(base, N);
      const auto& md = *m->matrix();
      for (std::size_t p = 0; p < m->dim(); ++p)
        for (std::size_t q = 0; q < m->dim(); ++q) {
          // [E^a_ij, E^b_kl] = d_jk E^{ab}_il - d_li E^{ba}_kj
          VectorAccumulator acc;
          const int i = md.row(p), j = md.col(p), k = md.row(q), l = md.col(q);
          if (j == k)
            for (const auto& e : base->product(md.entry(p), md.entry(q)))
              acc.add(static_cast<std::uint32_t>(md.index(i, l, e.index)), e.value);
          if (l == i)
            for (const auto& e : base->product(md.entry(q), md.entry(p)))
              acc.add(static_cast<std::uint32_t>(md.index(k, j, e.index)), -e.value);
          CHECK(same_vector(m->bracket(p, q), acc.finish()));
        }
    }
}

TEST_CASE("validation reports broken tables") {
  auto table = oracle::s3_table();
  auto good = group_algebra(table, "s3copy");
  CHECK(validate_algebra(*good).ok);
  CHECK(oracle::conjugacy_classes(table) == 3);

  // Perturb c[0][0] by one: e_0 e_0 = e_0 + e_0.
  std::vector<SparseVector> t;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) t.push_back(good->product(i, j));
  t[0] = unit_vector(0, 2);
  Algebra broken("broken", good->basis_names(), good->unit(), t);
  auto rep = validate_algebra(broken);
  CHECK_FALSE(rep.ok);
  CHECK((!rep.associativity_failures.empty() || !rep.unit_failures.empty()));

  auto no_identity = table;
  no_identity[0] = std::vector<int>(6, 1);
  CHECK_THROWS_WITH_AS(group_algebra(no_identity), doctest::Contains("associativity"), AlgebraError);
  std::vector<std::vector<int>> constant(2, std::vector<int>(2, 0));
  CHECK_THROWS_WITH_AS(group_algebra(constant), doctest::Contains("identity"), AlgebraError);

  auto c3 = group_algebra({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(c3->dim() == 3);
  CHECK(c3->is_commutative());
  CHECK(group_algebra(table)->dim() == 6);
}

TEST_CASE("matrix algebra examples") {
  auto q = builtin_algebra("rationals");
  auto m2 = matrix_algebra(q, 2);
  CHECK(m2->dim() == 4);
  const auto& md = *m2->matrix();
  auto e12 = unit_vector(static_cast<std::uint32_t>(md.index(0, 1, 0)));
  auto e21 = unit_vector(static_cast<std::uint32_t>(md.index(1, 0, 0)));
  CHECK(same_vector(multiply(*m2, e12, e21), unit_vector(static_cast<std::uint32_t>(md.index(0, 0, 0)))));
  CHECK_THROWS_AS(matrix_algebra(q, 200), AlgebraError);
  CHECK_THROWS_AS(matrix_algebra(q, 0), AlgebraError);
  CHECK(validate_algebra(*matrix_algebra(q, 3)).ok);
}

TEST_CASE("morphism validation") {
  auto f = builtin_morphism("augmentation:3");
  auto r = validate_morphism(f);
  CHECK(r.ok());
  CHECK(r.surjective);
  CHECK(r.kernel_dim == 2);
  REQUIRE(r.nilpotency_degree.has_value());
  CHECK(*r.nilpotency_degree == 3);

  auto dual_aug = validate_morphism(builtin_morphism("augmentation:2"));
  REQUIRE(dual_aug.nilpotency_degree.has_value());
  CHECK(*dual_aug.nilpotency_degree == 2);

  auto id = validate_morphism(builtin_morphism("identity:dual"));
  CHECK(id.surjective);
  CHECK(id.injective);
  CHECK(id.kernel_dim == 0);
  CHECK(id.nilpotency_degree == std::optional<std::size_t>(0));

  auto proj = validate_morphism(builtin_morphism("split_projection"));
  CHECK(proj.ok());
  CHECK(proj.surjective);
  CHECK_FALSE(proj.nilpotency_degree.has_value());

  for (const auto& spec : builtin_specs()) {
    auto rep = validate_morphism(identity_morphism(algebra_from_spec(spec)));
    CHECK(rep.ok());
    CHECK(rep.injective);
    CHECK(rep.surjective);
    CHECK(rep.kernel_dim == 0);
  }

  // Not multiplicative: Q[x]/(x^3) -> Q[x]/(x^3), x -> 2x.
  auto a = builtin_algebra("truncated_poly", {3});
  SparseMatrix m(3, 3);
  m.set_column(0, unit_vector(0));
  m.set_column(1, unit_vector(1, 2));
  m.set_column(2, unit_vector(2, 2));
  auto bad = validate_morphism({a, a, m, "bad"});
  CHECK_FALSE(bad.multiplicative);
  CHECK_FALSE(bad.failures.empty());
}

TEST_CASE("algebra and morphism files round trip") {
  for (const auto& spec : {"dual", "s3", "matrix:2:dual"}) {
    auto a = algebra_from_spec(spec);
    auto j = algebra_to_json(*a);
    auto b = algebra_from_json(nlohmann::json::parse(j.dump()));
    CHECK(b->dim() == a->dim());
    CHECK(b->content_hash() == a->content_hash());
    CHECK(validate_algebra(*b).ok);
  }
  auto j = algebra_to_json(*builtin_algebra("dual"));
  CHECK(j["unit"][0] == "1/1");
  auto bad = j;
  bad["dim"] = 3;
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json::parse(bad.dump())), FormatError);
  auto f = builtin_morphism("augmentation:3");
  auto g = morphism_from_json(nlohmann::json::parse(morphism_to_json(f).dump()));
  CHECK(g.matrix == f.matrix);
}
