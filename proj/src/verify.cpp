#include "bracketforge/verify.hpp"

#include "bracketforge/error.hpp"
#include "bracketforge/fixtures.hpp"
#include "bracketforge/gc.hpp"
#include "bracketforge/ideals.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace bracketforge {

ReplayReport replay_cactus_counterexample(std::size_t gm_depth) {
  const Config cfg = preset("cactus14");
  const Realization g = cactus14_gamma();
  ReplayReport r;
  r.L1 = normalize_first(meet_lines(g[9], g[10], g[7], g[8]));
  r.L3 = normalize_first(meet_lines(r.L1, g[6], g[11], g[12]));
  r.L2 = normalize_first(meet_lines(r.L3, g[5], g[13], g[14]));
  auto q = [](long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
  };
  r.L1_ok = r.L1 == Vec3{1, q(13, 3), q(23, 3)};
  r.L3_ok = r.L3 == Vec3{1, q(13, 3), q(20, 3)};
  r.L2_ok = r.L2 == Vec3{1, q(65, 12), q(80, 12)};
  r.D = det3(r.L1, r.L2, g[4]);
  r.D_representatives = det3(3 * r.L1, 12 * r.L2, g[4]);
  r.D_ok = r.D_representatives == -455 && r.D != 0;
  r.circuit_variety = in_circuit_variety(cfg, g);
  r.gm_depth = gm_depth;
  GMOptions opt;
  opt.depth = gm_depth;
  for (const auto& p : gm_generators(cfg, opt)) {
    ++r.gm_checked;
    Rational v = p.eval(g);
    if (v != 0) r.gm_nonvanishing.push_back({p.to_string(), to_string(v)});
  }
  return r;
}

namespace {

std::string set_str(const std::vector<Label>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Config with_line(const Config& c, const Line& t) {
  auto lines = c.lines();
  lines.push_back(t);
  auto par = c.parallel_classes();
  return Config(c.ground(), lines, c.loops(), par);
}

void check_nesting(DecompReport& rep) {
  rep.checked_nesting = true;
  // V_M sits below every other dependency set; that is checked, then it is left out.
  const Config& m = rep.components.front().cfg;
  for (const auto& c : rep.components)
    if (c.kind != "V_M" && !dependencies_contained(m, c.cfg)) rep.nested_pairs.push_back("M not below " + c.descriptor);
  for (std::size_t i = 0; i < rep.components.size(); ++i)
    for (std::size_t j = 0; j < rep.components.size(); ++j) {
      if (i == j || rep.components[i].kind == "V_M" || rep.components[j].kind == "V_M") continue;
      if (dependencies_contained(rep.components[i].cfg, rep.components[j].cfg))
        rep.nested_pairs.push_back(rep.components[i].descriptor + " <= " + rep.components[j].descriptor);
    }
}

}  // namespace

DecompReport decomposition_report(const std::string& name) {
  DecompReport rep;
  rep.source = name;
  const Config m = preset(name == "pascal" || name == "pappus" ? name : "unknown:" + name);
  std::vector<Label> all = m.ground();
  rep.components.push_back({"V_M", "M", m});
  rep.components.push_back({"V_U29", "U_{2,9}", Config(all, {all})});
  if (name == "pascal") {
    for (Label i : {7, 8, 9}) rep.components.push_back({"V_M(J)", "M(" + std::to_string(i) + ")", make_loops(m, {i})});
  } else {
    const std::vector<Line> triples = {{1, 4, 9}, {2, 5, 8}, {3, 6, 7}};
    for (const auto& t : triples)
      for (Label p : all) {
        if (std::find(t.begin(), t.end(), p) != t.end()) continue;
        rep.components.push_back({"V_I", "M(" + std::to_string(p) + ") + " + set_str(t), with_line(make_loops(m, {p}), t)});
      }
    for (const auto& t : triples) rep.components.push_back({"V_J", "M" + set_str(t), make_loops(m, t)});
    for (Label i : all) {
      std::vector<Label> rest;
      for (Label p : all)
        if (p != i) rest.push_back(p);
      std::vector<std::vector<Label>> par = {{i}};
      std::set<Label> used;
      for (auto li : m.lines_through(i)) {
        std::vector<Label> cls;
        for (Label p : m.lines()[li])
          if (p != i) cls.push_back(p);
        used.insert(cls.begin(), cls.end());
        par.push_back(cls);
      }
      for (Label p : rest)
        if (!used.count(p)) par.push_back({p});
      rep.components.push_back({"V_pi", "pi^" + std::to_string(i), Config(all, {rest}, {}, par)});
    }
  }
  check_nesting(rep);
  return rep;
}

DecompReport decomposition_report_cactus(const Config& cfg, const std::string& source) {
  auto cc = cactus_check(cfg);
  if (!cc.cactus) throw Error(ErrorCode::Hypothesis, "not a cactus configuration: " + cc.reason);
  DecompReport rep;
  rep.source = source;
  rep.upper_bound = true;
  auto q = points_with_degree_at_least(cfg, 3);
  if (q.size() > 20) throw Error(ErrorCode::InvalidArgument, "Q_M too large to enumerate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q.size()); ++mask) {
    std::vector<Label> j;
    for (std::size_t b = 0; b < q.size(); ++b)
      if (mask >> b & 1) j.push_back(q[b]);
    rep.components.push_back({j.empty() ? "V_M" : "V_M(J)", "M(" + set_str(j) + ")", make_loops(cfg, j)});
  }
  return rep;
}

std::vector<std::vector<Label>> small_dependencies(const Config& cfg) {
  const auto& gr = cfg.ground();
  std::map<Label, std::size_t> cls;
  for (std::size_t k = 0; k < cfg.parallel_classes().size(); ++k)
    for (Label p : cfg.parallel_classes()[k]) cls[p] = k;
  std::vector<std::set<std::size_t>> line_classes;
  for (const auto& l : cfg.lines()) {
    std::set<std::size_t> s;
    for (Label p : l) s.insert(cls.at(p));
    line_classes.push_back(s);
  }
  auto dep_pair = [&](Label a, Label b) { return cfg.is_loop(a) || cfg.is_loop(b) || cls.at(a) == cls.at(b); };
  std::vector<std::vector<Label>> out;
  for (Label a : gr)
    if (cfg.is_loop(a)) out.push_back({a});
  for (std::size_t i = 0; i < gr.size(); ++i)
    for (std::size_t j = i + 1; j < gr.size(); ++j)
      if (dep_pair(gr[i], gr[j])) out.push_back({gr[i], gr[j]});
  for (std::size_t i = 0; i < gr.size(); ++i)
    for (std::size_t j = i + 1; j < gr.size(); ++j)
      for (std::size_t k = j + 1; k < gr.size(); ++k) {
        Label a = gr[i], b = gr[j], c = gr[k];
        bool dep = dep_pair(a, b) || dep_pair(a, c) || dep_pair(b, c);
        for (std::size_t l = 0; !dep && l < line_classes.size(); ++l)
          dep = line_classes[l].count(cls.at(a)) && line_classes[l].count(cls.at(b)) && line_classes[l].count(cls.at(c));
        if (dep) out.push_back({a, b, c});
      }
  return out;
}

bool dependencies_contained(const Config& a, const Config& b) {
  auto da = small_dependencies(a), db = small_dependencies(b);
  std::set<std::vector<Label>> sb(db.begin(), db.end());
  return std::all_of(da.begin(), da.end(), [&](const auto& s) { return sb.count(s) > 0; });
}

LimitCheck pappus8_limit_check(const Rational& x, const Rational& y) {
  LimitCheck lc;
  Realization xi = pappus8_xi(x, y);
  for (long den : {10, 100, 1000}) {
    Realization ge = pappus8_epsilon(Rational(1, den), x, y);
    Rational worst = 0;
    for (Label l : xi.labels()) {
      Vec3 a = normalize_first(ge[l]), b = normalize_first(xi[l]);
      for (int k = 0; k < 3; ++k) worst = std::max<Rational>(worst, abs(a[k] - b[k]));
    }
    lc.max_diff.push_back(worst);
  }
  lc.monotone = lc.max_diff[0] > lc.max_diff[1] && lc.max_diff[1] > lc.max_diff[2];
  return lc;
}

bool VerifyReport::ok() const {
  return std::all_of(families.begin(), families.end(), [](const FamilyResult& f) { return f.ok(); });
}

unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("BRACKETFORGE_WORKERS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr std::size_t kKeepFailures = 5;

FamilyResult family(const std::string& name, std::uint64_t total) {
  FamilyResult f;
  f.family = name;
  f.total = total;
  return f;
}

struct SampleOutcome {
  std::vector<FamilyResult> families;
  FamilyResult common_q;
};

void record(FamilyResult& f, const Rational& v, const std::string& what) {
  ++f.evaluations;
  if (v == 0)
    ++f.zeros;
  else if (f.failures.size() < kKeepFailures)
    f.failures.push_back(what + " = " + to_string(v));
}

void merge(FamilyResult& into, const FamilyResult& from) {
  into.evaluations += from.evaluations;
  into.zeros += from.zeros;
  for (const auto& s : from.failures)
    if (into.failures.size() < kKeepFailures) into.failures.push_back(s);
}

std::string descriptor_string(const LiftDescriptor& d) {
  std::string s = d.matrix_id + " rows";
  for (auto r : d.rows) s += " " + std::to_string(r);
  s += " cols";
  for (auto c : d.cols) s += " " + std::to_string(c);
  if (!d.q.empty()) {
    s += " q ";
    for (int k : d.q) s += std::to_string(k + 1);
  }
  return s;
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t s) {
  return seed * 0x9E3779B97F4A7C15ULL + (s + 1) * 0xBF58476D1CE4E5B9ULL;
}

}  // namespace

VerifyReport verify_suite(const std::string& name, const Config& cfg, const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.config = name;
  rep.options = opt;

  std::function<Realization(std::size_t)> sampler;
  if (name == "pascal") {
    rep.fixture = "pascal_family";
    sampler = [&](std::size_t s) {
      Rng rng(sample_seed(opt.seed, s));
      return pascal_sample(rng);
    };
  } else if (name == "pappus") {
    rep.fixture = "pappus_realization";
    sampler = [&](std::size_t s) { return pappus_realization(sample_seed(opt.seed, s)); };
  } else if (name == "qs") {
    rep.fixture = "qs_realization";
    sampler = [&](std::size_t s) {
      Rng rng(sample_seed(opt.seed, s));
      return qs_realization(rng);
    };
  } else {
    if (!cfg.is_simple()) throw Error(ErrorCode::NotSimple, "requires simple configuration");
    if (!is_nilpotent(cfg)) throw Error(ErrorCode::Hypothesis, "no sampler: configuration is not nilpotent");
    rep.fixture = cactus_check(cfg).cactus ? "cactus_realization" : "nilpotent_realization";
    sampler = [&](std::size_t s) {
      Rng rng(sample_seed(opt.seed, s));
      return nilpotent_realization(cfg, rng);
    };
  }

  std::vector<BracketExpr> circuit = circuit_generators(cfg);
  std::vector<std::pair<std::string, BracketExpr>> gc;
  if (name == "pascal" || name == "pappus") {
    for (const auto& g : gc_generators_preset(name)) gc.push_back({g.expression, g.derived});
  } else {
    GMOptions gm;
    gm.depth = opt.depth;
    for (const auto& p : gm_generators(cfg, gm)) gc.push_back({p.to_string(), p});
  }

  std::optional<LiftFamily> fam;
  std::vector<LiftDescriptor> descs;
  std::vector<LiftMatrix> mats;
  if (name == "pascal" || name == "pappus" || name == "qs") {
    fam = lifting_generators_preset(name);
    Rng rng(opt.seed);
    for (std::uint64_t k = 0; k < opt.lifting_limit; ++k) descs.push_back(fam->at(rng.below(fam->count())));
    for (std::size_t p = 0; p < fam->parts().size(); ++p) mats.push_back(fam->matrix(p));
  }

  std::vector<SampleOutcome> outcomes(opt.samples);
  auto run = [&](std::size_t s) {
    SampleOutcome& o = outcomes[s];
    o.families = {family("circuit", 0), family("gc", 0), family("lifting", 0)};
    o.common_q.family = "lifting_common_q";
    Realization g = sampler(s);
    for (const auto& c : circuit) record(o.families[0], c.eval(g), c.to_string());
    for (const auto& [what, p] : gc) record(o.families[1], p.eval(g), what);
    if (fam) {
      Rng rng(sample_seed(opt.seed, s) ^ 0x5555);
      for (const auto& d : descs) {
        const auto& part = fam->parts()[d.part];
        Realization gp = g.restricted(part.cfg.ground());
        Vec3 q = generic_q(gp, rng);
        Matrix common = mats[d.part].evaluate(gp, q).submatrix(d.rows, d.cols);
        if (part.symbolic_q) {
          record(o.families[2], det(common), descriptor_string(d));
        } else {
          record(o.families[2], det(mats[d.part].evaluate_per_column(gp, d.q).submatrix(d.rows, d.cols)),
                 descriptor_string(d));
          record(o.common_q, det(common), descriptor_string(d));
        }
      }
    }
  };

  unsigned workers = std::min<unsigned>(worker_count(opt.workers), std::max<std::size_t>(1, opt.samples));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t s = w; s < opt.samples; s += workers) run(s);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  rep.families = {family("circuit", circuit.size()), family("gc", gc.size()), family("lifting", descs.size())};
  FamilyResult cq = family("lifting_common_q", descs.size());
  bool any_common = false;
  for (const auto& o : outcomes) {
    for (std::size_t k = 0; k < 3; ++k) merge(rep.families[k], o.families[k]);
    merge(cq, o.common_q);
    any_common = any_common || o.common_q.evaluations > 0;
  }
  if (!fam) rep.families.pop_back();
  if (any_common) rep.lifting_common_q = cq;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace bracketforge
