#include "bracketforge/ideals.hpp"

#include "bracketforge/error.hpp"

namespace bracketforge {

std::vector<BracketExpr> circuit_generators(const Config& cfg) {
  std::vector<BracketExpr> out;
  for (const auto& t : circuits3(cfg)) out.push_back(BracketExpr::bracket(t[0], t[1], t[2]));
  return out;
}

namespace {

struct PresetGC {
  const char* expression;
  const char* expected;
  bool published;
};

// Pascal: one four-fold concurrency, three point-on-concurrency and three collinearity forms.
const PresetGC kPascal[] = {
    {"(15 ^ 24) v (16 ^ 34) v (35 ^ 26)", "[153][142][546][326]-[154][132][536][426]", true},
    {"7 v (53 ^ 26) v (34 ^ 61)", "[526][361][734]-[326][361][754]+[326][461][753]", true},
    {"8 v (51 ^ 24) v (35 ^ 62)", "[524][362][815]-[524][562][813]+[124][562][853]", false},
    {"9 v (43 ^ 16) v (24 ^ 51)", "[416][251][934]-[416][451][932]+[316][451][942]", false},
    {"7 v 9 v (34 ^ 61)", "[749][361]-[461][739]", true},
    {"7 v 8 v (35 ^ 62)", "[785][362]-[783][562]", false},
    {"9 v 8 v (15 ^ 42)", "[985][142]-[981][542]", false},
};

// Pappus: the three lines through each point are concurrent.
const PresetGC kPappus[] = {
    {"(23 ^ 68) v 57", "[235][768]-[237][568]", true},
    {"(13 ^ 47) v 69", "[134][769]-[137][469]", true},
    {"(12 ^ 48) v 59", "[124][859]-[128][459]", true},
    {"(15 ^ 24) v 89", "[241][589]-[245][189]", true},
    {"(16 ^ 79) v 34", "[791][634]-[796][134]", true},
    {"(26 ^ 78) v 35", "[263][578]-[265][378]", true},
    {"(27 ^ 56) v 38", "[273][856]-[278][356]", true},
    {"(17 ^ 46) v 39", "[461][739]-[467][139]", true},
    {"(18 ^ 29) v 45", "[291][845]-[298][145]", true},
};

template <std::size_t N>
std::vector<GCGenerator> build(const PresetGC (&table)[N]) {
  std::vector<GCGenerator> out;
  for (const auto& t : table) out.push_back({t.expression, t.expected, t.published, parse_gc(t.expression).flatten()});
  return out;
}

}  // namespace

std::vector<GCGenerator> gc_generators_preset(const std::string& preset) {
  if (preset == "pascal") return build(kPascal);
  if (preset == "pappus") return build(kPappus);
  throw Error(ErrorCode::UnknownPreset, "no Grassmann-Cayley preset for '" + preset + "'");
}

bool gc_generator_matches(const GCGenerator& g) {
  return g.derived.expand().equal_up_to_sign(BracketExpr::parse(g.expected).expand());
}

LiftFamily lifting_generators_preset(const std::string& preset) {
  LiftFamily f;
  if (preset == "pascal") {
    f.add_part({"M", bracketforge::preset("pascal"), 7, LiftFamily::Positions::AllRows, false});
  } else if (preset == "pappus") {
    Config m = bracketforge::preset("pappus");
    f.add_part({"M", m, 7, LiftFamily::Positions::Principal, false});
    for (Label i : m.ground())
      f.add_part({"M\\{" + std::to_string(i) + "}", delete_points(m, {i}), 6, LiftFamily::Positions::AllRows, false});
  } else if (preset == "qs") {
    f.add_part({"M", bracketforge::preset("qs"), 4, LiftFamily::Positions::AllRows, true});
  } else {
    throw Error(ErrorCode::UnknownPreset, "no lifting preset for '" + preset + "'");
  }
  return f;
}

std::uint64_t minor_count(const std::string& preset) {
  if (preset != "pascal" && preset != "pappus" && preset != "qs")
    throw Error(ErrorCode::UnknownPreset, "unknown preset '" + preset + "'");
  return lifting_generators_preset(preset).count();
}

GeneratorSet cactus_generators(const Config& cfg, std::size_t depth) {
  auto cc = cactus_check(cfg);
  if (!cc.cactus) throw Error(ErrorCode::Hypothesis, "not a cactus configuration: " + cc.reason);
  auto q = points_with_degree_at_least(cfg, 3);
  if (subset_has_cycle(cfg, q))
    throw Error(ErrorCode::Hypothesis,
                "Q_M contains a cycle; the acyclicity hypothesis fails (cactus14 is the standard counterexample)");
  GeneratorSet gs;
  gs.circuit = circuit_generators(cfg);
  gs.gc = gm_generators(cfg, {depth, 64});
  gs.hypotheses = {"cactus: true", "Q_M acyclic: true"};
  return gs;
}

}  // namespace bracketforge
