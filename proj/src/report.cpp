#include "bracketforge/error.hpp"
#include "bracketforge/gc.hpp"
#include "bracketforge/ideals.hpp"
#include "bracketforge/io.hpp"

#include <iomanip>
#include <sstream>

namespace bracketforge {

namespace {

Json block_json(const Block& b) {
  return Json{{"vertices", b.vertices}, {"edges", b.edges}, {"kind", b.is_edge() ? "edge" : b.is_cycle() ? "cycle" : "other"}};
}

Json chain_json(const ChainReport& c) {
  return Json{{"stages", c.stages}, {"reaches_empty", c.reaches_empty}};
}

std::string entry_string(const std::optional<LiftEntry>& e) {
  if (!e) return "0";
  std::string s = e->sign < 0 ? "-" : "";
  if (e->a < 10 && e->b < 10) return s + "[" + std::to_string(e->a) + std::to_string(e->b) + "q]";
  return s + "[" + std::to_string(e->a) + " " + std::to_string(e->b) + " q]";
}

Json strings(const std::vector<BracketExpr>& v, std::uint64_t limit) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) out.push_back(v[i].to_string());
  return out;
}

bool has_gc_preset(const std::string& name) { return name == "pascal" || name == "pappus"; }
bool has_lift_preset(const std::string& name) { return name == "pascal" || name == "pappus" || name == "qs"; }

std::vector<BracketExpr> gc_slice(const Config& cfg, std::size_t depth, Json* hyp) {
  if (cactus_check(cfg).cactus) {
    auto gs = cactus_generators(cfg, depth);
    if (hyp) *hyp = gs.hypotheses;
    return gs.gc;
  }
  GMOptions opt;
  opt.depth = depth;
  return gm_generators(cfg, opt);
}

}  // namespace

Json describe_report(const Config& cfg, const std::string& name) {
  Json j;
  j["config"] = name;
  j["d"] = cfg.d();
  j["ground"] = cfg.ground();
  j["lines"] = cfg.lines();
  j["loops"] = cfg.loops();
  j["parallel"] = cfg.nontrivial_parallel_classes();
  j["simple"] = cfg.is_simple();
  if (cfg.is_simple()) {
    Json circ = Json::array();
    for (const auto& t : circuits3(cfg)) circ.push_back(bracket_string(t));
    j["circuits"] = circ;
    j["bases"] = bases3(cfg).size();
  }
  Json deg = Json::object();
  for (Label p : cfg.ground()) deg[std::to_string(p)] = degree(cfg, p);
  j["degrees"] = deg;
  auto [s, q] = chains(cfg);
  j["s_chain"] = chain_json(s);
  j["q_chain"] = chain_json(q);
  j["nilpotent"] = s.reaches_empty;
  j["solvable"] = q.reaches_empty;
  return j;
}

Json cactus_report(const Config& cfg) {
  auto r = cactus_check(cfg);
  Json j;
  j["cactus"] = r.cactus;
  j["reason"] = r.reason;
  Json ib = Json::array();
  for (const auto& b : r.incidence_blocks) ib.push_back(block_json(b));
  j["incidence_blocks"] = ib;
  Json gm;
  gm["vertices"] = r.gm_vertices;
  Json edges = Json::array();
  for (auto [a, b] : r.gm_edges) edges.push_back({a, b});
  gm["edges"] = edges;
  Json gb = Json::array();
  for (const auto& b : r.gm_blocks) gb.push_back(block_json(b));
  gm["blocks"] = gb;
  gm["cactus_graph"] = r.gm_is_cactus_graph;
  j["g_m"] = gm;
  auto qm = points_with_degree_at_least(cfg, 3);
  j["q_m"] = qm;
  j["q_m_has_cycle"] = subset_has_cycle(cfg, qm);
  return j;
}

Json ordering_report(const Config& cfg) {
  Json j;
  auto o = admissible_ordering(cfg);
  j["nilpotent"] = o.has_value();
  if (o) {
    j["ordering"] = o->perm;
    j["weights"] = o->weights;
    j["weight_sum"] = o->weight_sum();
    j["dim"] = o->dim();
  }
  return j;
}

Json lift_matrix_report(const Config& cfg) {
  LiftMatrix m = lift_matrix(cfg, QScheme::symbolic());
  Json rows = Json::array();
  for (const auto& t : m.rows()) rows.push_back(bracket_string(t));
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows().size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols().size(); ++c) row.push_back(entry_string(m.entry(r, c)));
    entries.push_back(row);
  }
  return Json{{"rows", rows}, {"cols", m.cols()}, {"entries", entries}};
}

std::uint64_t generator_count(const Config& cfg, const std::string& name, const std::string& family, std::size_t depth) {
  if (family == "circuit") return circuits3(cfg).size();
  if (family == "gc") return has_gc_preset(name) ? gc_generators_preset(name).size() : gc_slice(cfg, depth, nullptr).size();
  if (family == "lifting") {
    if (!has_lift_preset(name)) throw Error(ErrorCode::InvalidArgument, "no lifting family for '" + name + "'");
    return minor_count(name);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
}

Json generators_report(const Config& cfg, const std::string& name, const GeneratorQuery& q) {
  Json j;
  j["config"] = name;
  Json fams = Json::object();
  bool all = q.family == "all";
  if (!all && q.family != "circuit" && q.family != "gc" && q.family != "lifting")
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + q.family + "'");
  if (all || q.family == "circuit") {
    auto c = circuit_generators(cfg);
    Json f{{"count", c.size()}};
    if (!q.count_only) f["polynomials"] = strings(c, c.size());
    fams["circuit"] = f;
  }
  if (all || q.family == "gc") {
    Json f;
    if (has_gc_preset(name)) {
      auto gs = gc_generators_preset(name);
      f["count"] = gs.size();
      if (!q.count_only) {
        Json list = Json::array();
        for (const auto& g : gs)
          list.push_back(Json{{"expression", g.expression},
                              {"polynomial", g.derived.to_string()},
                              {"expected", g.expected},
                              {"published", g.published},
                              {"matches", gc_generator_matches(g)}});
        f["polynomials"] = list;
      }
    } else {
      Json hyp = Json::array();
      auto gs = gc_slice(cfg, q.depth, &hyp);
      f["count"] = gs.size();
      f["depth"] = q.depth;
      f["slice"] = "finite";
      if (!hyp.empty()) f["hypotheses"] = hyp;
      if (!q.count_only) f["polynomials"] = strings(gs, q.limit);
    }
    fams["gc"] = f;
  }
  if (all || q.family == "lifting") {
    Json f;
    if (has_lift_preset(name)) {
      auto fam = lifting_generators_preset(name);
      f["count"] = fam.count();
      Json parts = Json::array();
      for (std::size_t i = 0; i < fam.parts().size(); ++i) {
        const auto& p = fam.parts()[i];
        parts.push_back(Json{{"matrix", p.id},
                             {"minor_size", p.size},
                             {"positions", p.positions == LiftFamily::Positions::Principal ? "principal" : "all"},
                             {"q", p.symbolic_q ? "symbolic" : "basis"},
                             {"count", fam.part_count(i)}});
      }
      f["parts"] = parts;
      if (!q.count_only) {
        Json ds = Json::array();
        for (std::uint64_t k = 0; k < q.limit && k < fam.count(); ++k) {
          auto d = fam.at(k);
          Json dj{{"matrix", d.matrix_id}, {"rows", d.rows}, {"cols", d.cols}};
          if (!d.q.empty()) {
            std::string qs;
            for (int b : d.q) qs += static_cast<char>('1' + b);
            dj["q"] = qs;
          }
          ds.push_back(dj);
        }
        f["descriptors"] = ds;
      }
    } else {
      f["count"] = 0;
      f["note"] = "no lifting family for this configuration";
    }
    fams["lifting"] = f;
  }
  j["families"] = fams;
  return j;
}

namespace {

Json family_json(const FamilyResult& f) {
  return Json{{"family", f.family}, {"generators", f.total}, {"evaluations", f.evaluations},
              {"zeros", f.zeros},   {"pass", f.ok()},        {"failures", f.failures}};
}

}  // namespace

Json verify_report_json(const VerifyReport& r, bool timings) {
  Json j;
  j["config"] = r.config;
  j["fixture"] = r.fixture;
  j["samples"] = r.options.samples;
  j["seed"] = r.options.seed;
  j["lifting_limit"] = r.options.lifting_limit;
  Json fams = Json::array();
  for (const auto& f : r.families) fams.push_back(family_json(f));
  j["families"] = fams;
  if (r.lifting_common_q) j["diagnostics"] = Json{{"lifting_common_q", family_json(*r.lifting_common_q)}};
  j["pass"] = r.ok();
  if (timings) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << r.seconds;
    j["seconds"] = os.str();
  }
  return j;
}

Json decompose_report(const Config& cfg, const std::string& name) {
  DecompReport r = (name == "pascal" || name == "pappus") ? decomposition_report(name)
                                                          : decomposition_report_cactus(cfg, name);
  Json j;
  j["config"] = name;
  j["count"] = r.count();
  j["upper_bound"] = r.upper_bound;
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"kind", c.kind}, {"descriptor", c.descriptor}, {"matroid", config_to_json(c.cfg)}});
  j["components"] = comps;
  if (r.checked_nesting) {
    j["non_nested"] = r.nested_pairs.empty();
    j["nested_pairs"] = r.nested_pairs;
  }
  return j;
}

Json replay_report_json(const ReplayReport& r) {
  Json j;
  j["L1"] = vec_to_json(r.L1);
  j["L1_matches"] = r.L1_ok;
  j["L3"] = vec_to_json(r.L3);
  j["L3_matches"] = r.L3_ok;
  j["L2"] = vec_to_json(r.L2);
  j["L2_matches"] = r.L2_ok;
  j["det_normalized"] = to_string(r.D);
  j["det_representatives"] = to_string(r.D_representatives);
  j["det_matches"] = r.D_ok;
  j["in_circuit_variety"] = r.circuit_variety.member;
  if (!r.circuit_variety.member) j["witness"] = r.circuit_variety.witness;
  Json gm{{"depth", r.gm_depth}, {"checked", r.gm_checked}};
  Json nv = Json::array();
  for (const auto& f : r.gm_nonvanishing) nv.push_back(Json{{"generator", f.generator}, {"value", f.value}});
  gm["nonvanishing"] = nv;
  j["g_m"] = gm;
  j["pass"] = r.ok();
  return j;
}

}  // namespace bracketforge
