#pragma once

// Rank-three point-line configurations and their combinatorics.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bracketforge {

using Label = int;
using Line = std::vector<Label>;
using Triple = std::array<Label, 3>;

class Config {
 public:
  Config() = default;
  // Validates everything listed in the class invariants; throws InvalidArgument.
  // An empty parallel partition means singleton classes.
  Config(std::vector<Label> ground, std::vector<Line> lines, std::vector<Label> loops = {},
         std::vector<std::vector<Label>> parallel = {});
  // Ground set 1..d.
  static Config on_range(int d, std::vector<Line> lines, std::vector<Label> loops = {},
                         std::vector<std::vector<Label>> parallel = {});

  const std::vector<Label>& ground() const { return ground_; }
  std::size_t d() const { return ground_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<Label>& loops() const { return loops_; }
  // Full partition of the non-loop points, singletons included.
  const std::vector<std::vector<Label>>& parallel_classes() const { return parallel_; }
  std::vector<std::vector<Label>> nontrivial_parallel_classes() const;

  bool contains(Label p) const;
  std::size_t index_of(Label p) const;  // position in ground(); throws if absent
  bool is_loop(Label p) const;
  bool is_simple() const;
  // Indices into lines() of the lines containing p.
  std::vector<std::size_t> lines_through(Label p) const;
  bool on_common_line(const std::vector<Label>& pts) const;

  bool operator==(const Config& o) const = default;

 private:
  std::vector<Label> ground_;
  std::vector<Line> lines_;
  std::vector<Label> loops_;
  std::vector<std::vector<Label>> parallel_;
};

// Size-3 circuits of a simple configuration, sorted.
std::vector<Triple> circuits3(const Config& cfg);
// 3-subsets not contained in a line.
std::vector<Triple> bases3(const Config& cfg);
std::size_t degree(const Config& cfg, Label p);
std::vector<Label> points_with_degree_at_least(const Config& cfg, std::size_t k);

Config restrict_to(const Config& cfg, const std::vector<Label>& S);
Config delete_points(const Config& cfg, const std::vector<Label>& S);
Config make_loops(const Config& cfg, const std::vector<Label>& J);
// Labels of b (other than q) are offset past a's labels and kept contiguous; q becomes p.
Config free_glue(const Config& a, const Config& b, Label p, Label q);
// The label that b's point l receives in free_glue(a, b, p, q).
Label glue_label(const Config& a, const Config& b, Label p, Label q, Label l);

enum class ChainKind { S, Q };

struct ChainReport {
  ChainKind kind;
  std::vector<std::vector<Label>> stages;
  bool reaches_empty = false;  // nilpotent for S, solvable for Q
};

std::pair<ChainReport, ChainReport> chains(const Config& cfg);
bool is_nilpotent(const Config& cfg);

struct Ordering {
  std::vector<Label> perm;
  std::vector<std::size_t> weights;
  std::size_t weight_sum() const;
  std::size_t dim() const { return perm.size() - weight_sum(); }
};

// Weights of an arbitrary ordering.
std::vector<std::size_t> ordering_weights(const Config& cfg, const std::vector<Label>& perm);
// Greedy peeling of points of current degree <= 1, smallest label first.
std::optional<Ordering> admissible_ordering(const Config& cfg);

struct Block {
  std::vector<std::string> vertices;  // "p3" for points, "L2" for lines in the incidence graph
  std::size_t edges = 0;
  bool is_edge() const { return edges == 1; }
  bool is_cycle() const { return edges >= 3 && edges == vertices.size(); }
};

struct CactusReport {
  bool cactus = false;
  std::string reason;
  std::vector<Block> incidence_blocks;
  // G(M): points of degree >= 2, edges between co-linear pairs.
  std::vector<Label> gm_vertices;
  std::vector<std::pair<Label, Label>> gm_edges;
  std::vector<Block> gm_blocks;
  bool gm_is_cactus_graph = false;
};

CactusReport cactus_check(const Config& cfg);

// Distinct x_1..x_k in X and distinct lines l_1..l_k with {x_i, x_{i+1}} in l_i, cyclically.
bool subset_has_cycle(const Config& cfg, const std::vector<Label>& X);

// pascal, pappus, qs, three-concurrent, grid3x3, fano, cactus14, line:<n>, cycle:<k>:<m>.
Config preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace bracketforge
