#pragma once

#include "lhh/algebra.hpp"
#include "lhh/chain_complex.hpp"
#include "lhh/complexes.hpp"
#include "lhh/kahler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lhh {

enum class MapKind {
  PHI,
  THETA,
  EPSILON,
  PROJ_LIE,
  PROJ_ADJ,
  PROJ_I,
  P_KAHLER,
  TRACE,
  CORNER,
  LIFT_P,
  THETA_NF,
  BAR_PI,
  BAR_IOTA,
  EMBED_CY
};

std::string map_kind_name(MapKind k);
std::optional<MapKind> parse_map_kind(const std::string& name);
std::vector<MapKind> all_map_kinds();

/// Antisymmetrization CL_{n+1} -> CHH_n, slot 0 fixed. `break_sign` flips the
/// sign of one permutation term in degrees >= 3 (a deliberately wrong map for
/// exercising failure reporting).
ChainMapRep make_phi(const Algebra& a, const ComplexPtr& cl, const ComplexPtr& chh, bool break_sign = false);
/// Lambda^{n+1} -> C^lambda_n, antisymmetrization followed by the coset projection.
ChainMapRep make_theta(const Algebra& a, const ComplexPtr& ce, const ComplexPtr& clambda);
/// A (x) Lambda^n -> CHH_n, antisymmetrization of slots 1..n.
ChainMapRep make_epsilon(const Algebra& a, const ComplexPtr& ce_adj, const ComplexPtr& chh);
/// CL_n -> Lambda^n.
ChainMapRep make_proj_lie(const Algebra& a, const ComplexPtr& cl, const ComplexPtr& ce);
/// CL_{n+1} -> A (x) Lambda^n.
ChainMapRep make_proj_adjoint(const Algebra& a, const ComplexPtr& cl, const ComplexPtr& ce_adj);
/// CHH_n -> C^lambda_n.
ChainMapRep make_proj_I(const Algebra& a, const ComplexPtr& chh, const ComplexPtr& clambda);

struct KahlerMap {
  ComplexPtr omega;
  std::vector<KahlerModule> modules;
  /// CL_{n+1} -> Omega^n, a_0 (x) ... (x) a_n -> a_0 da_1 ^ ... ^ da_n.
  ChainMapRep p;
};

/// p into Omega^n for n <= cl.cutoff - 1; A must be commutative.
KahlerMap make_p_kahler(const Algebra& a, const ComplexPtr& cl);
/// epsilon_Omega applied to the fixed section of each Omega^n basis element, as a matrix Omega^n -> CHH_n.
SparseMatrix kahler_antisymmetrization(const Algebra& a, const KahlerModule& m);

/// tr : CHH(M_N(A)) -> CHH(A), summing over cyclically closing index paths.
ChainMapRep make_trace(const Algebra& matrix_algebra, const ComplexPtr& chh_matrix, const ComplexPtr& chh_base);
/// CHH(A) -> CHH(M_N(A)), every tensor factor placed at matrix position (1,1).
ChainMapRep make_corner(const Algebra& matrix_algebra, const ComplexPtr& chh_base, const ComplexPtr& chh_matrix);
/// P_n(A) -> CL_{n+1}(gl_N(A)) (shift -1): sigma (x) a -> E^{a_0}_{0 sigma(0)} (x) ... . Not a chain map.
ChainMapRep make_lift_P(const Algebra& matrix_algebra, const ComplexPtr& p, const ComplexPtr& cl_matrix);
/// CL_n(gl_N(A)) -> L_n(A): permutation-pattern monomials to their normal form, everything else to 0.
ChainMapRep make_theta_nf(const Algebra& matrix_algebra, const ComplexPtr& cl_matrix, const ComplexPtr& l);
/// pi : CHH(k[G]) -> B(G), drops g_0.
ChainMapRep make_bar_pi(const Algebra& group_algebra, const ComplexPtr& chh, const ComplexPtr& bar);
/// iota : B(G) -> CHH(k[G]), prepends (g_1 ... g_n)^{-1}.
ChainMapRep make_bar_iota(const Algebra& group_algebra, const ComplexPtr& bar, const ComplexPtr& chh);
/// CHH_n(A) -> P_n(A), a -> tau_{n+1} (x) a.
ChainMapRep make_embed_cy(const Algebra& a, const ComplexPtr& chh, const ComplexPtr& p);

/// tr o phi : CL_{n+1}(gl_N(A)) -> CHH_n(A) computed directly (source may be weight-zero restricted).
ChainMapRep make_trace_phi(const Algebra& matrix_algebra, const ComplexPtr& cl_matrix, const ComplexPtr& chh_base);

/// The map induced by an algebra morphism on CL, CHH or CLAMBDA (CL may be weight-zero restricted
/// when f is an entrywise matrix morphism).
ChainMapRep make_functorial(const AlgebraMorphism& f, ComplexKind kind, const ComplexPtr& source,
                            const ComplexPtr& target);

}  // namespace lhh
