#include "doctest.h"
#include "oracles.hpp"

#include "lhh/chain_maps.hpp"
#include "lhh/complexes.hpp"
#include "lhh/kahler.hpp"
#include "lhh/permutation.hpp"

using namespace lhh;

namespace {

BuildOptions opts(int cutoff) {
  BuildOptions o;
  o.cutoff = cutoff;
  o.max_dim = 300000;
  return o;
}

void require_chain_map(const ChainMapRep& f) {
  auto r = verify_chain_map(f);
  CHECK_MESSAGE(r.ok, r.witness);
}

const std::vector<std::string> kAlgebras = {"rationals", "dual", "truncated_poly:3", "split:2", "cyclic:2", "s3",
                                            "matrix:2:rationals"};

int cutoff_for(const Algebra& a) { return a.dim() <= 2 ? 5 : (a.dim() <= 3 ? 4 : 3); }

}  // namespace

TEST_CASE("comparison maps are chain maps") {
  for (const auto& spec : kAlgebras) {
    CAPTURE(spec);
    auto a = algebra_from_spec(spec);
    const int c = cutoff_for(*a);
    auto cl = build_CL(*a, opts(c));
    auto chh = build_CHH(*a, opts(c - 1));
    auto cla = build_Clambda(*a, opts(c - 1));
    auto ce = build_CE(*a, opts(c));
    auto cea = build_CE_adjoint(*a, opts(c - 1));
    auto phi = make_phi(*a, cl, chh);
    auto theta = make_theta(*a, ce, cla);
    auto eps = make_epsilon(*a, cea, chh);
    auto pl = make_proj_lie(*a, cl, ce);
    auto pa = make_proj_adjoint(*a, cl, cea);
    auto pi = make_proj_I(*a, chh, cla);
    for (const auto* f : {&phi, &theta, &eps, &pl, &pa, &pi}) {
      CAPTURE(f->kind);
      require_chain_map(*f);
    }
    // The two factorizations of the antisymmetrization.
    auto r1 = same_chain_map(compose(eps, pa), phi);
    CHECK_MESSAGE(r1.ok, r1.witness);
    auto r2 = same_chain_map(compose(pi, phi), compose(theta, pl));
    CHECK_MESSAGE(r2.ok, r2.witness);
  }
}

TEST_CASE("a sign-broken antisymmetrization is detected") {
  auto a = algebra_from_spec("dual");
  auto cl = build_CL(*a, opts(5));
  auto chh = build_CHH(*a, opts(4));
  auto bad = make_phi(*a, cl, chh, true);
  auto r = verify_chain_map(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("square fails") != std::string::npos);
  CHECK(same_chain_map(bad, make_phi(*a, cl, chh)).ok == false);
}

TEST_CASE("antisymmetrization is antisymmetric in the moving slots") {
  auto a = algebra_from_spec("matrix:2:rationals");
  auto cl = build_CL(*a, opts(3));
  auto chh = build_CHH(*a, opts(2));
  auto phi = make_phi(*a, cl, chh);
  const std::size_t d = a->dim();
  // phi(a0 (x) x (x) y) = -phi(a0 (x) y (x) x)
  for (std::size_t a0 = 0; a0 < d; ++a0)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        auto u = phi.at(3).column((a0 * d + x) * d + y);
        auto v = phi.at(3).column((a0 * d + y) * d + x);
        CHECK(same_vector(u, scaled(v, -1)));
      }
}

TEST_CASE("Kaehler differentials") {
  auto t3 = algebra_from_spec("truncated_poly:3");
  CHECK(kahler_module(*t3, 0).dim() == 3);
  CHECK(kahler_module(*t3, 1).dim() == 2);
  CHECK(kahler_module(*t3, 2).dim() == 0);
  auto split = algebra_from_spec("split:2");
  CHECK(kahler_module(*split, 0).dim() == 2);
  for (int n = 1; n <= 3; ++n) CHECK(kahler_module(*split, n).dim() == 0);
  auto dual = algebra_from_spec("dual");
  CHECK(kahler_module(*dual, 1).dim() == 1);
  CHECK_THROWS_AS(kahler_module(*algebra_from_spec("s3"), 1), AlgebraError);

  for (const auto& spec : {"dual", "truncated_poly:3", "split:2"}) {
    CAPTURE(spec);
    auto a = algebra_from_spec(spec);
    auto cl = build_CL(*a, opts(4));
    auto chh = build_CHH(*a, opts(3));
    auto km = make_p_kahler(*a, cl);
    require_chain_map(km.p);
    auto phi = make_phi(*a, cl, chh);
    // phi(x) - eps(s(p(x))) is a boundary for every cycle x.
    for (int n = 0; n <= 2; ++n) {
      auto h = homology(*cl, n + 1);
      auto hh = homology(*chh, n);
      auto eps = kahler_antisymmetrization(*a, km.modules[n]);
      for (const auto& x : h.representatives) {
        auto lhs = phi.at(n + 1).apply(x);
        auto rhs = eps.apply(km.p.at(n + 1).apply(x));
        CHECK(hh.is_boundary(axpy(lhs, -1, rhs)));
      }
    }
  }
}

TEST_CASE("trace and corner inclusion") {
  for (const auto& base : {"rationals", "dual"}) {
    CAPTURE(base);
    auto a = algebra_from_spec(base);
    auto m = algebra_from_spec(std::string("matrix:2:") + base);
    const int c = a->dim() == 1 ? 3 : 2;
    auto chh_m = build_CHH(*m, opts(c));
    auto chh_a = build_CHH(*a, opts(c));
    auto tr = make_trace(*m, chh_m, chh_a);
    auto co = make_corner(*m, chh_a, chh_m);
    require_chain_map(tr);
    require_chain_map(co);
    auto r = same_chain_map(compose(tr, co), identity_map(chh_a));
    CHECK_MESSAGE(r.ok, r.witness);
    for (int n = 0; n < c; ++n) {
      const auto b = betti_numbers(*chh_a).betti[n];
      CHECK(induced_rank(tr, n) == b);
      CHECK(induced_rank(co, n) == b);
    }
  }
}

TEST_CASE("direct trace of the antisymmetrization") {
  auto m = algebra_from_spec("matrix:2:rationals");
  auto q = algebra_from_spec("rationals");
  auto cl = build_CL(*m, opts(3));
  auto chh_m = build_CHH(*m, opts(2));
  auto chh_q = build_CHH(*q, opts(2));
  auto direct = make_trace_phi(*m, cl, chh_q);
  require_chain_map(direct);
  auto r = same_chain_map(direct, compose(make_trace(*m, chh_m, chh_q), make_phi(*m, cl, chh_m)));
  CHECK_MESSAGE(r.ok, r.witness);

  // Weight-zero source for gl_3(Q): still a chain map.
  auto m3 = algebra_from_spec("matrix:3:rationals");
  BuildOptions w = opts(3);
  w.weight_zero = true;
  auto cl3 = build_CL(*m3, w);
  CHECK(cl3->dims[3] == 93);
  require_chain_map(make_trace_phi(*m3, cl3, build_CHH(*q, opts(2))));
}

TEST_CASE("permutation complexes") {
  for (const auto& spec : {"rationals", "dual"}) {
    CAPTURE(spec);
    auto a = algebra_from_spec(spec);
    const int c = a->dim() == 1 ? 5 : 3;
    auto chh = build_CHH(*a, opts(c));
    auto p = build_P(*a, opts(c));
    auto l = build_L(*a, opts(c + 1));
    require_chain_map(make_embed_cy(*a, chh, p));

    auto m = algebra_from_spec(std::string("matrix:") + std::to_string(c + 1) + ":" + spec);
    if (m->dim() > 16) continue;
    auto clm = build_CL(*m, opts(std::min(c + 1, 3)));
    auto lift = make_lift_P(*m, p, clm);
    auto nf = make_theta_nf(*m, clm, l);
    require_chain_map(nf);
    // The normal form undoes the lift: P_n sits inside L_{n+1}.
    auto cycles_and_back = compose(nf, lift);
    for (int n = 0; n + 1 <= clm->cutoff && n <= p->cutoff; ++n) {
      REQUIRE(cycles_and_back.has(n));
      const auto& mat = cycles_and_back.at(n);
      const auto cyc = full_cycles(n + 1);
      const std::size_t words = mat.cols() / cyc.size();
      for (std::size_t s = 0; s < cyc.size(); ++s)
        for (std::size_t w = 0; w < words; ++w)
          CHECK(same_vector(mat.column(s * words + w),
                            unit_vector(static_cast<std::uint32_t>(L_index(cyc[s], w, a->dim())))));
    }
  }
}

TEST_CASE("group algebra bar maps") {
  for (const auto& spec : {"cyclic:2", "cyclic:3", "s3"}) {
    CAPTURE(spec);
    auto g = algebra_from_spec(spec);
    const int c = g->dim() > 3 ? 3 : 4;
    auto chh = build_CHH(*g, opts(c));
    auto bar = build_bar(*g, opts(c));
    auto pi = make_bar_pi(*g, chh, bar);
    auto io = make_bar_iota(*g, bar, chh);
    require_chain_map(pi);
    require_chain_map(io);
    auto r = same_chain_map(compose(pi, io), identity_map(bar));
    CHECK_MESSAGE(r.ok, r.witness);
  }
}

TEST_CASE("maps induced by algebra morphisms") {
  for (const auto& name : {"augmentation:3", "augmentation:2", "split_projection"}) {
    CAPTURE(name);
    auto f = builtin_morphism(name);
    for (auto kind : {ComplexKind::CL, ComplexKind::CHH, ComplexKind::CLAMBDA}) {
      auto s = build_complex(kind, *f.source, opts(3));
      auto t = build_complex(kind, *f.target, opts(3));
      require_chain_map(make_functorial(f, kind, s, t));
    }
  }
  auto f = builtin_morphism("augmentation:2");
  auto mf = matrix_morphism(f, algebra_from_spec("matrix:2:dual"), algebra_from_spec("matrix:2:rationals"));
  BuildOptions w = opts(3);
  w.weight_zero = true;
  auto s = build_CL(*mf.source, w);
  auto t = build_CL(*mf.target, w);
  require_chain_map(make_functorial(mf, ComplexKind::CL, s, t));
  CHECK_THROWS_AS(make_functorial(mf, ComplexKind::CL, s, build_CL(*mf.target, opts(3))), std::invalid_argument);
}

TEST_CASE("map kinds round trip") {
  for (auto k : all_map_kinds()) CHECK(parse_map_kind(map_kind_name(k)) == k);
  CHECK_FALSE(parse_map_kind("NOPE").has_value());
}
