#pragma once

// Seeded exact samplers and the fixed matrices used by the checks.

#include "bracketforge/config.hpp"
#include "bracketforge/realization.hpp"

#include <cstdint>
#include <random>

namespace bracketforge {

inline constexpr long kDefaultRange = 50;
inline constexpr int kRetryCap = 100;

// Deterministic across platforms: raw 64-bit draws, reduced by modulo.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi);  // inclusive
  std::uint64_t below(std::uint64_t n);
  Rational nonzero_rational(long range = 9);
  Vec3 vec(long range = kDefaultRange);

 private:
  std::mt19937_64 eng_;
};

// Distinct nonzero points on one random plane.
Realization generic_collinear(const std::vector<Label>& labels, Rng& rng, long range = kDefaultRange);
Vec3 generic_q(const Realization& g, Rng& rng, long range = kDefaultRange);

// Pascal parametrization (columns relabelled to the Pascal lines); throws Degenerate
// when a basis minor vanishes.
Realization pascal_family(const Rational& x, const Rational& y, const Rational& eta, const Rational& eps, const Rational& z);
Realization pascal_sample(Rng& rng);

// Lines 123 and 456 random, then 7 = 15^24, 8 = 16^34, 9 = 26^35.
Realization pappus_realization(std::uint64_t seed);

// Pappus minus the point 1 and the line 456: lines 247, 269, 348, 359, 789 on {2..9}.
Config pappus8_config();
Realization pappus8_family(const Rational& v, const Rational& z, const Rational& w);
// The degenerate collection with 2 = 3 = 9 and 2,4,7,8 collinear.
Realization pappus8_xi(const Rational& x, const Rational& y);
// pappus8_family at 1+v = 1/eps, w = eps*y/x, 1+z = x/eps.
Realization pappus8_epsilon(const Rational& eps, const Rational& x, const Rational& y);

// Build along an admissible ordering; verified element of Gamma_M. Needs a nilpotent cfg.
Realization nilpotent_realization(const Config& cfg, Rng& rng);
Realization cactus_realization(const Config& cfg, std::uint64_t seed);

// The fixed 3 x 14 collection in V_C(cactus14) that is not in V_M.
Realization cactus14_gamma();

// Rank-2 collection in V_C(qs) obtained by projecting a QS realization from a point.
Realization qs_projected(Rng& rng);
Realization qs_realization(Rng& rng);

// A random free gluing of 1-4 lines and cycles.
Config random_glue_tree(Rng& rng);

}  // namespace bracketforge
