#pragma once

// Circuit, Grassmann-Cayley and lifting generator families.

#include "bracketforge/gc.hpp"
#include "bracketforge/lifting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bracketforge {

struct GCGenerator {
  std::string expression;  // GC expression the polynomial is derived from
  std::string expected;    // published bracket form (or our own for unlisted analogues)
  bool published = true;
  BracketExpr derived;     // from the engine
};

struct GeneratorSet {
  std::vector<BracketExpr> circuit;
  std::vector<BracketExpr> gc;
  std::vector<std::string> gc_notes;
  std::optional<LiftFamily> lifting;
  std::vector<std::string> hypotheses;  // report lines for cactus assembly
};

std::vector<BracketExpr> circuit_generators(const Config& cfg);

// The 7 (pascal) or 9 (pappus) polynomials, derived from their GC expressions.
std::vector<GCGenerator> gc_generators_preset(const std::string& preset);
// Up-to-sign match of the engine's polynomial with the expected bracket string, after expansion.
bool gc_generator_matches(const GCGenerator& g);

// pascal: 7x7 minors over {e1,e2,e3}^9; pappus: principal 7x7 minors of the 9x9 plus
// the 6x6 minors of the nine 6x8 deletions; qs: all 4x4 minors with symbolic q.
LiftFamily lifting_generators_preset(const std::string& preset);
std::uint64_t minor_count(const std::string& preset);

// Enforces cactus_check and acyclicity of Q_M; throws Hypothesis naming the failed one.
GeneratorSet cactus_generators(const Config& cfg, std::size_t depth = 2);

}  // namespace bracketforge
