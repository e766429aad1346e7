#pragma once

// Worked computations, decomposition reports and the sampled vanishing suite.

#include "bracketforge/config.hpp"
#include "bracketforge/realization.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bracketforge {

struct GMFinding {
  std::string generator;
  std::string value;
};

struct ReplayReport {
  Vec3 L1, L3, L2;  // first nonzero coordinate scaled to 1
  bool L1_ok = false, L3_ok = false, L2_ok = false;
  Rational D;                  // det3(L1, L2, gamma_4) with the normalized vectors
  Rational D_representatives;  // with (3,13,23), (12,65,80), (1,0,0)
  bool D_ok = false;
  MembershipResult circuit_variety;
  std::size_t gm_depth = 1;
  std::size_t gm_checked = 0;
  std::vector<GMFinding> gm_nonvanishing;  // reported, not a failure
  bool ok() const { return L1_ok && L3_ok && L2_ok && D_ok && circuit_variety.member; }
};

ReplayReport replay_cactus_counterexample(std::size_t gm_depth = 1);

struct Component {
  std::string kind;  // V_M, V_U29, V_M(J), V_I, V_J, V_pi
  std::string descriptor;
  Config cfg;
};

struct DecompReport {
  std::string source;
  std::vector<Component> components;
  bool upper_bound = false;  // cactus candidates may be redundant
  bool checked_nesting = false;
  std::vector<std::string> nested_pairs;
  std::size_t count() const { return components.size(); }
};

// pascal or pappus.
DecompReport decomposition_report(const std::string& preset);
// The 2^|Q_M| candidates M(J); requires a cactus.
DecompReport decomposition_report_cactus(const Config& cfg, const std::string& source);

// Dependent sets of size <= 3 (loops, parallel pairs, collinear triples), all sorted.
std::vector<std::vector<Label>> small_dependencies(const Config& cfg);
// Every small dependency of a is one of b.
bool dependencies_contained(const Config& a, const Config& b);

// Monotone shrinking of the matrix-gama entries towards xi at eps = 1/10, 1/100, 1/1000.
struct LimitCheck {
  std::vector<Rational> max_diff;  // per eps
  bool monotone = false;
};
LimitCheck pappus8_limit_check(const Rational& x, const Rational& y);

struct FamilyResult {
  std::string family;
  std::uint64_t total = 0;       // generators in the family (sampled ones for lifting)
  std::uint64_t evaluations = 0;
  std::uint64_t zeros = 0;
  std::vector<std::string> failures;  // first few
  bool ok() const { return evaluations == zeros; }
};

struct VerifyOptions {
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  std::uint64_t lifting_limit = 200;
  std::size_t depth = 2;
  unsigned workers = 0;  // 0: BRACKETFORGE_WORKERS or hardware concurrency
};

struct VerifyReport {
  std::string config;
  std::string fixture;
  VerifyOptions options;
  std::vector<FamilyResult> families;
  std::optional<FamilyResult> lifting_common_q;  // diagnostic, not part of ok()
  double seconds = 0;
  bool ok() const;
};

// name selects the fixture sampler (pascal, pappus, qs, otherwise constructive).
VerifyReport verify_suite(const std::string& name, const Config& cfg, const VerifyOptions& opt);

unsigned worker_count(unsigned requested);

}  // namespace bracketforge
