#include "bracketforge/config.hpp"

#include "bracketforge/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bracketforge {

namespace {

std::vector<Label> sorted_unique(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool subset_of(const Line& a, const Line& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); }

}  // namespace

Config::Config(std::vector<Label> ground, std::vector<Line> lines, std::vector<Label> loops,
               std::vector<std::vector<Label>> parallel) {
  ground_ = sorted_unique(std::move(ground));
  auto in_ground = [&](Label p) { return std::binary_search(ground_.begin(), ground_.end(), p); };
  loops_ = sorted_unique(std::move(loops));
  for (Label l : loops_)
    if (!in_ground(l)) invalid("loop " + std::to_string(l) + " outside the ground set");

  std::map<Label, std::size_t> cls;  // point -> class index
  for (auto& c : parallel) {
    c = sorted_unique(std::move(c));
    if (c.empty()) continue;
    for (Label p : c) {
      if (!in_ground(p)) invalid("parallel class member " + std::to_string(p) + " outside the ground set");
      if (is_loop(p)) invalid("loop " + std::to_string(p) + " in a parallel class");
      if (cls.count(p)) invalid("point " + std::to_string(p) + " in two parallel classes");
      cls[p] = parallel_.size();
    }
    parallel_.push_back(c);
  }
  for (Label p : ground_)
    if (!is_loop(p) && !cls.count(p)) {
      cls[p] = parallel_.size();
      parallel_.push_back({p});
    }
  std::sort(parallel_.begin(), parallel_.end());
  for (std::size_t i = 0; i < parallel_.size(); ++i)
    for (Label p : parallel_[i]) cls[p] = i;

  for (auto& l : lines) {
    l = sorted_unique(std::move(l));
    if (l.size() < 3) invalid("line with fewer than 3 points");
    for (Label p : l) {
      if (!in_ground(p)) invalid("line member " + std::to_string(p) + " outside the ground set");
      if (is_loop(p)) invalid("loop " + std::to_string(p) + " on a line");
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (i == j) continue;
      if (subset_of(lines[i], lines[j])) invalid("a line is contained in another line");
      if (j < i) continue;
      std::set<std::size_t> ci, shared;
      for (Label p : lines[i]) ci.insert(cls[p]);
      for (Label p : lines[j])
        if (ci.count(cls[p])) shared.insert(cls[p]);
      if (shared.size() > 1) invalid("two lines share more than one point");
    }
  lines_ = std::move(lines);
}

Config Config::on_range(int d, std::vector<Line> lines, std::vector<Label> loops,
                        std::vector<std::vector<Label>> parallel) {
  if (d < 0) invalid("negative d");
  std::vector<Label> g(d);
  std::iota(g.begin(), g.end(), 1);
  return Config(std::move(g), std::move(lines), std::move(loops), std::move(parallel));
}

std::vector<std::vector<Label>> Config::nontrivial_parallel_classes() const {
  std::vector<std::vector<Label>> out;
  for (const auto& c : parallel_)
    if (c.size() > 1) out.push_back(c);
  return out;
}

bool Config::contains(Label p) const { return std::binary_search(ground_.begin(), ground_.end(), p); }

std::size_t Config::index_of(Label p) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), p);
  if (it == ground_.end() || *it != p) invalid("point " + std::to_string(p) + " not in the ground set");
  return static_cast<std::size_t>(it - ground_.begin());
}

bool Config::is_loop(Label p) const { return std::binary_search(loops_.begin(), loops_.end(), p); }

bool Config::is_simple() const {
  if (!loops_.empty()) return false;
  for (const auto& c : parallel_)
    if (c.size() > 1) return false;
  return true;
}

std::vector<std::size_t> Config::lines_through(Label p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (std::binary_search(lines_[i].begin(), lines_[i].end(), p)) out.push_back(i);
  return out;
}

bool Config::on_common_line(const std::vector<Label>& pts) const {
  Line s = sorted_unique(pts);
  for (const auto& l : lines_)
    if (subset_of(s, l)) return true;
  return false;
}

std::vector<Triple> circuits3(const Config& cfg) {
  if (!cfg.is_simple()) throw Error(ErrorCode::NotSimple, "requires simple configuration");
  std::set<Triple> out;
  for (const auto& l : cfg.lines())
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j)
        for (std::size_t k = j + 1; k < l.size(); ++k) out.insert({l[i], l[j], l[k]});
  return {out.begin(), out.end()};
}

std::vector<Triple> bases3(const Config& cfg) {
  std::vector<Triple> out;
  const auto& g = cfg.ground();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k)
        if (!cfg.on_common_line({g[i], g[j], g[k]})) out.push_back({g[i], g[j], g[k]});
  return out;
}

std::size_t degree(const Config& cfg, Label p) {
  if (!cfg.contains(p)) invalid("point " + std::to_string(p) + " not in the ground set");
  if (cfg.is_loop(p)) invalid("degree of loop " + std::to_string(p));
  return cfg.lines_through(p).size();
}

std::vector<Label> points_with_degree_at_least(const Config& cfg, std::size_t k) {
  std::vector<Label> out;
  for (Label p : cfg.ground())
    if (!cfg.is_loop(p) && cfg.lines_through(p).size() >= k) out.push_back(p);
  return out;
}

Config restrict_to(const Config& cfg, const std::vector<Label>& S) {
  std::set<Label> keep;
  for (Label p : S)
    if (cfg.contains(p)) keep.insert(p);
  std::vector<Line> lines;
  for (const auto& l : cfg.lines()) {
    Line m;
    for (Label p : l)
      if (keep.count(p)) m.push_back(p);
    if (m.size() >= 3) lines.push_back(m);
  }
  std::vector<Label> loops;
  for (Label p : cfg.loops())
    if (keep.count(p)) loops.push_back(p);
  std::vector<std::vector<Label>> par;
  for (const auto& c : cfg.parallel_classes()) {
    std::vector<Label> m;
    for (Label p : c)
      if (keep.count(p)) m.push_back(p);
    if (!m.empty()) par.push_back(m);
  }
  // Restricting a valid configuration can make one surviving line a subset of another
  // only if they shared two points, which validation already excludes.
  return Config({keep.begin(), keep.end()}, lines, loops, par);
}

Config delete_points(const Config& cfg, const std::vector<Label>& S) {
  std::set<Label> drop(S.begin(), S.end());
  std::vector<Label> keep;
  for (Label p : cfg.ground())
    if (!drop.count(p)) keep.push_back(p);
  return restrict_to(cfg, keep);
}

Config make_loops(const Config& cfg, const std::vector<Label>& J) {
  std::set<Label> loops(cfg.loops().begin(), cfg.loops().end());
  for (Label p : J) {
    if (!cfg.contains(p)) invalid("point " + std::to_string(p) + " not in the ground set");
    loops.insert(p);
  }
  std::vector<Line> lines;
  for (const auto& l : cfg.lines()) {
    Line m;
    for (Label p : l)
      if (!loops.count(p)) m.push_back(p);
    if (m.size() >= 3) lines.push_back(m);
  }
  std::vector<std::vector<Label>> par;
  for (const auto& c : cfg.parallel_classes()) {
    std::vector<Label> m;
    for (Label p : c)
      if (!loops.count(p)) m.push_back(p);
    if (!m.empty()) par.push_back(m);
  }
  return Config(cfg.ground(), lines, {loops.begin(), loops.end()}, par);
}

Label glue_label(const Config& a, const Config& b, Label p, Label q, Label l) {
  if (l == q) return p;
  Label base = a.ground().empty() ? 0 : a.ground().back();
  std::size_t idx = b.index_of(l);
  std::size_t qi = b.index_of(q);
  return base + static_cast<Label>(idx < qi ? idx + 1 : idx);
}

Config free_glue(const Config& a, const Config& b, Label p, Label q) {
  if (!a.contains(p)) invalid("glue point " + std::to_string(p) + " out of range");
  if (!b.contains(q)) invalid("glue point " + std::to_string(q) + " out of range");
  if (!a.is_simple() || !b.is_simple()) throw Error(ErrorCode::NotSimple, "requires simple configuration");
  std::vector<Label> ground = a.ground();
  for (Label l : b.ground())
    if (l != q) ground.push_back(glue_label(a, b, p, q, l));
  std::vector<Line> lines = a.lines();
  for (const auto& l : b.lines()) {
    Line m;
    for (Label x : l) m.push_back(glue_label(a, b, p, q, x));
    lines.push_back(m);
  }
  return Config(ground, lines);
}

std::pair<ChainReport, ChainReport> chains(const Config& cfg) {
  auto run = [&](ChainKind kind, std::size_t k) {
    ChainReport rep{kind, {}, false};
    Config cur = cfg;
    std::vector<Label> prev = cur.ground();
    for (;;) {
      std::vector<Label> st = points_with_degree_at_least(cur, k);
      rep.stages.push_back(st);
      if (st.empty()) {
        rep.reaches_empty = true;
        break;
      }
      if (st == prev) break;
      prev = st;
      cur = restrict_to(cur, st);
    }
    return rep;
  };
  return {run(ChainKind::S, 2), run(ChainKind::Q, 3)};
}

bool is_nilpotent(const Config& cfg) { return chains(cfg).first.reaches_empty; }

std::size_t Ordering::weight_sum() const { return std::accumulate(weights.begin(), weights.end(), std::size_t{0}); }

std::vector<std::size_t> ordering_weights(const Config& cfg, const std::vector<Label>& perm) {
  std::vector<std::size_t> w;
  std::vector<Label> prefix;
  for (Label p : perm) {
    prefix.push_back(p);
    Config r = restrict_to(cfg, prefix);
    w.push_back(r.is_loop(p) ? 0 : r.lines_through(p).size());
  }
  return w;
}

std::optional<Ordering> admissible_ordering(const Config& cfg) {
  std::vector<Label> remaining = cfg.ground();
  std::vector<Label> peeled;
  while (!remaining.empty()) {
    Config cur = restrict_to(cfg, remaining);
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](Label p) { return cur.is_loop(p) || cur.lines_through(p).size() <= 1; });
    if (it == remaining.end()) return std::nullopt;
    peeled.push_back(*it);
    remaining.erase(it);
  }
  Ordering o;
  o.perm.assign(peeled.rbegin(), peeled.rend());
  o.weights = ordering_weights(cfg, o.perm);
  return o;
}

namespace {

// Undirected simple graph; blocks via Tarjan's edge stack.
struct Graph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> adj;
  explicit Graph(std::size_t n_) : n(n_), adj(n_) {}
  void add_edge(std::size_t u, std::size_t v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
};

std::vector<std::pair<std::vector<std::size_t>, std::size_t>> blocks_of(const Graph& g) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> out;
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  int timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t parent) {
    disc[u] = low[u] = timer++;
    for (std::size_t v : g.adj[u]) {
      if (v == parent) continue;
      if (disc[v] == -1) {
        stack.push_back({u, v});
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::set<std::size_t> vs;
          std::size_t edges = 0;
          for (;;) {
            auto e = stack.back();
            stack.pop_back();
            vs.insert(e.first);
            vs.insert(e.second);
            ++edges;
            if (e.first == u && e.second == v) break;
          }
          out.push_back({{vs.begin(), vs.end()}, edges});
        }
      } else if (disc[v] < disc[u]) {
        stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  const std::size_t none = static_cast<std::size_t>(-1);
  for (std::size_t s = 0; s < g.n; ++s)
    if (disc[s] == -1) dfs(s, none);
  return out;
}

}  // namespace

CactusReport cactus_check(const Config& cfg) {
  if (!cfg.is_simple()) throw Error(ErrorCode::NotSimple, "requires simple configuration");
  CactusReport rep;
  const auto& g = cfg.ground();
  const auto& L = cfg.lines();

  Graph bg(g.size() + L.size());
  for (std::size_t li = 0; li < L.size(); ++li)
    for (Label p : L[li]) bg.add_edge(cfg.index_of(p), g.size() + li);
  auto name = [&](std::size_t v) {
    return v < g.size() ? "p" + std::to_string(g[v]) : "L" + std::to_string(v - g.size() + 1);
  };
  std::vector<std::size_t> cycles_at_line(L.size(), 0);
  bool ok = true;
  for (const auto& [vs, edges] : blocks_of(bg)) {
    Block b;
    for (auto v : vs) b.vertices.push_back(name(v));
    b.edges = edges;
    if (!b.is_edge() && !b.is_cycle()) {
      ok = false;
      if (rep.reason.empty()) rep.reason = "incidence block with " + std::to_string(edges) + " edges is not a cycle";
    }
    if (b.is_cycle())
      for (auto v : vs)
        if (v >= g.size() && ++cycles_at_line[v - g.size()] > 1) {
          ok = false;
          if (rep.reason.empty()) rep.reason = "line " + name(v) + " lies on two cycles";
        }
    rep.incidence_blocks.push_back(std::move(b));
  }
  rep.cactus = ok;

  rep.gm_vertices = points_with_degree_at_least(cfg, 2);
  Graph gg(rep.gm_vertices.size());
  for (std::size_t i = 0; i < rep.gm_vertices.size(); ++i)
    for (std::size_t j = i + 1; j < rep.gm_vertices.size(); ++j)
      if (cfg.on_common_line({rep.gm_vertices[i], rep.gm_vertices[j]})) {
        rep.gm_edges.push_back({rep.gm_vertices[i], rep.gm_vertices[j]});
        gg.add_edge(i, j);
      }
  rep.gm_is_cactus_graph = true;
  for (const auto& [vs, edges] : blocks_of(gg)) {
    Block b;
    for (auto v : vs) b.vertices.push_back("p" + std::to_string(rep.gm_vertices[v]));
    b.edges = edges;
    if (!b.is_edge() && !b.is_cycle()) rep.gm_is_cactus_graph = false;
    rep.gm_blocks.push_back(std::move(b));
  }
  return rep;
}

bool subset_has_cycle(const Config& cfg, const std::vector<Label>& X) {
  std::vector<Label> xs;
  for (Label x : X)
    if (cfg.contains(x) && !cfg.is_loop(x)) xs.push_back(x);
  xs = sorted_unique(xs);
  std::map<Label, std::size_t> id;
  for (Label x : xs) id[x] = id.size();
  // Union-find over points of X and lines meeting X twice; a repeated union closes a cycle.
  std::vector<std::size_t> parent(xs.size() + cfg.lines().size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (std::size_t li = 0; li < cfg.lines().size(); ++li) {
    std::vector<std::size_t> hit;
    for (Label p : cfg.lines()[li])
      if (id.count(p)) hit.push_back(id[p]);
    if (hit.size() < 2) continue;
    std::size_t lv = xs.size() + li;
    for (auto h : hit) {
      std::size_t a = find(h), b = find(lv);
      if (a == b) return true;
      parent[a] = b;
    }
  }
  return false;
}

namespace {

Config cycle_preset(int k, int m) {
  if (k < 3 || m < 3) invalid("cycle preset needs k >= 3 and at least 3 points per line");
  std::vector<Line> lines;
  int next = k + 1;
  for (int j = 1; j <= k; ++j) {
    Line l{j, j % k + 1};
    for (int e = 0; e < m - 2; ++e) l.push_back(next++);
    lines.push_back(l);
  }
  return Config::on_range(next - 1, lines);
}

int parse_int(const std::string& s, const std::string& name) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::UnknownPreset, "unknown preset '" + name + "'");
  }
}

}  // namespace

Config preset(const std::string& name) {
  if (name == "pascal")
    return Config::on_range(9, {{1, 6, 8}, {1, 5, 7}, {2, 4, 7}, {2, 6, 9}, {3, 4, 8}, {3, 5, 9}, {7, 8, 9}});
  if (name == "pappus")
    return Config::on_range(
        9, {{1, 2, 3}, {1, 6, 8}, {1, 5, 7}, {2, 4, 7}, {2, 6, 9}, {7, 8, 9}, {4, 5, 6}, {3, 4, 8}, {3, 5, 9}});
  if (name == "qs") return Config::on_range(6, {{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}});
  if (name == "three-concurrent") return Config::on_range(7, {{1, 2, 7}, {3, 4, 7}, {5, 6, 7}});
  if (name == "grid3x3")
    return Config::on_range(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}});
  if (name == "fano")
    return Config::on_range(7, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}});
  // Reconstructed from the seven lines named in the acyclicity counterexample; the
  // original figure may carry more detail, but these give 14 points and Q_M = {1,2,3}.
  if (name == "cactus14")
    return Config::on_range(14, {{1, 2, 4}, {2, 3, 5}, {1, 3, 6}, {1, 7, 8}, {1, 9, 10}, {3, 11, 12}, {2, 13, 14}});
  if (name.rfind("line:", 0) == 0) {
    int n = parse_int(name.substr(5), name);
    if (n < 1) invalid("line preset needs at least one point");
    std::vector<Line> lines;
    if (n >= 3) {
      Line l(n);
      std::iota(l.begin(), l.end(), 1);
      lines.push_back(l);
    }
    return Config::on_range(n, lines);
  }
  if (name.rfind("cycle:", 0) == 0) {
    std::string rest = name.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::UnknownPreset, "unknown preset '" + name + "'");
    return cycle_preset(parse_int(rest.substr(0, colon), name), parse_int(rest.substr(colon + 1), name));
  }
  throw Error(ErrorCode::UnknownPreset, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"pascal", "pappus", "qs", "three-concurrent", "grid3x3", "fano", "cactus14", "line:<n>", "cycle:<k>:<m>"};
}

}  // namespace bracketforge
