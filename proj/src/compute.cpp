#include "lhh/compute.hpp"

#include "lhh/kahler.hpp"

#include <map>
#include <stdexcept>

namespace lhh {

namespace {

using json = nlohmann::ordered_json;

json to_json(const std::vector<std::size_t>& v) {
  json j = json::array();
  for (auto x : v) j.push_back(x);
  return j;
}

class Workspace {
 public:
  explicit Workspace(const ComputeRequest& r) : req_(r) {}

  AlgebraPtr base() const { return req_.algebra; }

  AlgebraPtr matrices() {
    if (!matrices_) matrices_ = matrix_algebra(req_.algebra, req_.matrix_size);
    return matrices_;
  }

  ComplexPtr complex(ComplexKind kind, bool over_matrices = false) {
    const std::string key = complex_kind_name(kind) + (over_matrices ? "@M" : "");
    auto it = built_.find(key);
    if (it != built_.end()) return it->second;
    BuildOptions o;
    o.cutoff = req_.max_degree;
    o.max_dim = req_.max_dim;
    o.cache = req_.cache;
    o.weight_zero = req_.weight_zero && kind == ComplexKind::CL && (over_matrices || req_.algebra->matrix());
    return built_[key] = build_complex(kind, over_matrices ? *matrices() : *req_.algebra, o);
  }

  const BettiTable& betti(const ComplexPtr& c) {
    auto it = betti_.find(c.get());
    if (it != betti_.end()) return it->second;
    return betti_[c.get()] = betti_numbers(*c, req_.jobs);
  }

 private:
  const ComputeRequest& req_;
  AlgebraPtr matrices_;
  std::map<std::string, ComplexPtr> built_;
  std::map<const ChainComplex*, BettiTable> betti_;
};

ChainMapRep build_map(MapKind k, Workspace& w) {
  const Algebra& a = *w.base();
  switch (k) {
    case MapKind::PHI: return make_phi(a, w.complex(ComplexKind::CL), w.complex(ComplexKind::CHH));
    case MapKind::THETA: return make_theta(a, w.complex(ComplexKind::CE), w.complex(ComplexKind::CLAMBDA));
    case MapKind::EPSILON: return make_epsilon(a, w.complex(ComplexKind::CE_ADJ), w.complex(ComplexKind::CHH));
    case MapKind::PROJ_LIE: return make_proj_lie(a, w.complex(ComplexKind::CL), w.complex(ComplexKind::CE));
    case MapKind::PROJ_ADJ: return make_proj_adjoint(a, w.complex(ComplexKind::CL), w.complex(ComplexKind::CE_ADJ));
    case MapKind::PROJ_I: return make_proj_I(a, w.complex(ComplexKind::CHH), w.complex(ComplexKind::CLAMBDA));
    case MapKind::P_KAHLER: return make_p_kahler(a, w.complex(ComplexKind::CL)).p;
    case MapKind::TRACE:
      return make_trace(*w.matrices(), w.complex(ComplexKind::CHH, true), w.complex(ComplexKind::CHH));
    case MapKind::CORNER:
      return make_corner(*w.matrices(), w.complex(ComplexKind::CHH), w.complex(ComplexKind::CHH, true));
    case MapKind::LIFT_P:
      return make_lift_P(*w.matrices(), w.complex(ComplexKind::P), w.complex(ComplexKind::CL, true));
    case MapKind::THETA_NF:
      return make_theta_nf(*w.matrices(), w.complex(ComplexKind::CL, true), w.complex(ComplexKind::L));
    case MapKind::BAR_PI: return make_bar_pi(a, w.complex(ComplexKind::CHH), w.complex(ComplexKind::BAR));
    case MapKind::BAR_IOTA: return make_bar_iota(a, w.complex(ComplexKind::BAR), w.complex(ComplexKind::CHH));
    case MapKind::EMBED_CY: return make_embed_cy(a, w.complex(ComplexKind::CHH), w.complex(ComplexKind::P));
  }
  throw std::logic_error("unhandled map kind");
}

json complex_entry(const ChainComplex& c, const std::string& algebra, const BettiTable& t) {
  json j;
  j["kind"] = c.kind;
  j["algebra"] = algebra;
  j["weight_zero"] = c.weight_zero;
  j["cutoff"] = c.cutoff;
  j["dims"] = to_json(c.dims);
  j["boundary_ranks"] = to_json(t.ranks);
  j["betti"] = to_json(t.betti);
  j["valid_through"] = t.valid_through;
  j["boundary_incomplete_degree"] = c.cutoff;
  return j;
}

}  // namespace

MapSignature map_signature(MapKind k) {
  switch (k) {
    case MapKind::PHI: return {"CL", "CHH", 1, false, false};
    case MapKind::THETA: return {"CE", "CLAMBDA", 1, false, false};
    case MapKind::EPSILON: return {"CE_ADJ", "CHH", 0, false, false};
    case MapKind::PROJ_LIE: return {"CL", "CE", 0, false, false};
    case MapKind::PROJ_ADJ: return {"CL", "CE_ADJ", 1, false, false};
    case MapKind::PROJ_I: return {"CHH", "CLAMBDA", 0, false, false};
    case MapKind::P_KAHLER: return {"CL", "OMEGA", 1, false, false};
    case MapKind::TRACE: return {"CHH", "CHH", 0, true, false};
    case MapKind::CORNER: return {"CHH", "CHH", 0, false, true};
    case MapKind::LIFT_P: return {"P", "CL", -1, false, true};
    case MapKind::THETA_NF: return {"CL", "L", 0, true, false};
    case MapKind::BAR_PI: return {"CHH", "BAR", 0, false, false};
    case MapKind::BAR_IOTA: return {"BAR", "CHH", 0, false, false};
    case MapKind::EMBED_CY: return {"CHH", "P", 0, false, false};
  }
  throw std::logic_error("unhandled map kind");
}

ComputeResult run_compute(const ComputeRequest& req) {
  if (!req.algebra) throw std::invalid_argument("compute: no algebra");
  if (req.max_degree < 1) throw std::invalid_argument("compute: max degree must be at least 1");
  if (req.matrix_size < 1) throw std::invalid_argument("compute: matrix size must be at least 1");
  Workspace w(req);
  ComputeResult out;
  json& r = out.report;
  r["schema"] = "lhh.compute/1";
  r["algebra"] = {{"name", req.algebra->name()},
                  {"dim", req.algebra->dim()},
                  {"hash", hex64(req.algebra->content_hash())},
                  {"commutative", req.algebra->is_commutative()}};
  r["config"] = {{"max_degree", req.max_degree},
                 {"matrix_size", req.matrix_size},
                 {"max_dim", req.max_dim},
                 {"weight_zero", req.weight_zero}};

  json complexes = json::array();
  for (auto kind : req.complexes) {
    auto c = w.complex(kind);
    complexes.push_back(complex_entry(*c, req.algebra->name(), w.betti(c)));
  }
  r["complexes"] = complexes;

  json maps = json::array();
  for (auto kind : req.maps) {
    const auto sig = map_signature(kind);
    ChainMapRep f = build_map(kind, w);
    json m;
    m["kind"] = map_kind_name(kind);
    auto side = [&](const ComplexPtr& c, bool over) {
      return json{{"kind", c->kind}, {"algebra", over ? w.matrices()->name() : req.algebra->name()}};
    };
    m["source"] = side(f.source, sig.source_over_matrices);
    m["target"] = side(f.target, sig.target_over_matrices);
    m["shift"] = f.shift;
    auto check = verify_chain_map(f);
    const bool exempt = kind == MapKind::LIFT_P;
    m["chain_map"] = check.ok;
    m["witness"] = check.ok ? "" : check.witness;
    if (exempt) {
      m["note"] = "per-degree map, not a chain map by construction; no induced maps";
    } else if (!check.ok) {
      out.maps_verified = false;
    }
    json induced = json::array();
    if (check.ok && !exempt) {
      const auto& bs = w.betti(f.source);
      const auto& bt = w.betti(f.target);
      for (int n = std::max(0, f.shift); n <= f.last_degree(); ++n) {
        const int m_deg = n - f.shift;
        if (!f.has(n) || n > bs.valid_through || m_deg > bt.valid_through) continue;
        induced.push_back({{"source_degree", n},
                           {"target_degree", m_deg},
                           {"rank", induced_rank(f, n)},
                           {"source_betti", bs.betti[n]},
                           {"target_betti", bt.betti[m_deg]}});
      }
    }
    m["induced"] = induced;
    maps.push_back(m);
  }
  r["maps"] = maps;
  return out;
}

}  // namespace lhh
