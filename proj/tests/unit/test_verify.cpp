#include "bracketforge/error.hpp"
#include "bracketforge/fixtures.hpp"
#include "bracketforge/io.hpp"
#include "bracketforge/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace bracketforge;

namespace {

bool all_circuits_vanish(const Config& c, const Realization& g) {
  for (const auto& t : oracle::circuits(c.ground(), c.lines()))
    if (oracle::bracket(g[t[0]], g[t[1]], g[t[2]]) != 0) return false;
  return true;
}

bool all_bases_nonzero(const Config& c, const Realization& g) {
  auto circ = oracle::circuits(c.ground(), c.lines());
  const auto& gr = c.ground();
  for (std::size_t i = 0; i < gr.size(); ++i)
    for (std::size_t j = i + 1; j < gr.size(); ++j)
      for (std::size_t k = j + 1; k < gr.size(); ++k) {
        std::array<Label, 3> t{gr[i], gr[j], gr[k]};
        if (std::find(circ.begin(), circ.end(), t) != circ.end()) continue;
        if (oracle::bracket(g[t[0]], g[t[1]], g[t[2]]) == 0) return false;
      }
  return true;
}

}  // namespace

TEST(CircuitVariety, Examples) {
  EXPECT_TRUE(in_circuit_variety(preset("cactus14"), cactus14_gamma()).member);
  Rng rng(71);
  std::vector<Vec3> cols;
  for (int i = 0; i < 9; ++i) cols.push_back(rng.vec());
  auto r = in_circuit_variety(preset("pappus"), Realization({1, 2, 3, 4, 5, 6, 7, 8, 9}, cols));
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.witness.rfind("circuit {", 0), 0u);
  EXPECT_TRUE(in_circuit_variety(preset("pappus"), Realization::zeros(preset("pappus").ground())).member);
  EXPECT_THROW(in_circuit_variety(preset("pappus"), Realization::zeros({1, 2, 3})), Error);
}

TEST(CircuitVariety, LoopsAndParallel) {
  Config c = Config::on_range(4, {}, {4}, {{1, 2}});
  Realization g({1, 2, 3, 4}, {make_vec(1, 2, 3), make_vec(2, 4, 6), make_vec(0, 0, 1), make_vec(0, 0, 0)});
  EXPECT_TRUE(in_circuit_variety(c, g).member);
  g[4] = make_vec(0, 1, 0);
  EXPECT_EQ(in_circuit_variety(c, g).witness, "loop 4");
  g[4] = make_vec(0, 0, 0);
  g[2] = make_vec(0, 1, 0);
  EXPECT_EQ(in_circuit_variety(c, g).witness, "parallel {1,2}");
}

TEST(Pappus, RealizationSeeds) {
  Config c = preset("pappus");
  std::vector<Realization> seen;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Realization g = pappus_realization(s);
    EXPECT_EQ(g.rank(), 3u);
    EXPECT_TRUE(all_circuits_vanish(c, g));
    EXPECT_TRUE(all_bases_nonzero(c, g));
    for (const auto& h : seen) {
      bool same = true;
      for (Label l : c.ground()) same = same && proportional(g[l], h[l]);
      EXPECT_FALSE(same);
    }
    seen.push_back(g);
  }
  EXPECT_EQ(pappus_realization(7), pappus_realization(7));
}

TEST(Pascal, FamilyGeneric) {
  Config c = preset("pascal");
  Rng rng(72);
  for (int t = 0; t < 20; ++t) {
    Realization g = pascal_sample(rng);
    EXPECT_TRUE(all_circuits_vanish(c, g));
    EXPECT_TRUE(all_bases_nonzero(c, g));
    EXPECT_EQ(g.rank(), 3u);
  }
}

TEST(Pascal, FamilyRejectsDegenerate) {
  // x = 0 puts column 5 on top of column 2 (points 9 and 8)
  EXPECT_THROW(pascal_family(0, 2, 3, 5, 7), Error);
  EXPECT_NO_THROW(pascal_family(Rational(1, 3), 2, 3, 5, 7));
}

TEST(Pappus8, FamilyAndLimit) {
  Config n = pappus8_config();
  Realization g = pappus8_family(Rational(2, 3), Rational(5, 7), Rational(-3, 4));
  EXPECT_TRUE(all_circuits_vanish(n, g));
  EXPECT_TRUE(all_bases_nonzero(n, g));
  Realization xi = pappus8_xi(2, 5);
  EXPECT_TRUE(proportional(xi[2], xi[3]) && proportional(xi[3], xi[9]));
  EXPECT_EQ(det3(xi[4], xi[7], xi[8]), 0);
  auto lc = pappus8_limit_check(2, 5);
  EXPECT_TRUE(lc.monotone);
  EXPECT_EQ(lc.max_diff.size(), 3u);
}

TEST(Replay, Counterexample) {
  auto r = replay_cactus_counterexample();
  EXPECT_EQ(r.L1, (Vec3{1, Rational(13, 3), Rational(23, 3)}));
  EXPECT_EQ(r.L3, (Vec3{1, Rational(13, 3), Rational(20, 3)}));
  EXPECT_EQ(r.L2, (Vec3{1, Rational(65, 12), Rational(20, 3)}));
  EXPECT_EQ(r.D_representatives, -455);
  EXPECT_EQ(r.D, Rational(-455, 36));
  EXPECT_TRUE(r.circuit_variety.member);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.gm_checked, 7u);
}

TEST(Decomposition, Counts) {
  EXPECT_EQ(decomposition_report("pascal").count(), 5u);
  auto p = decomposition_report("pappus");
  EXPECT_EQ(p.count(), 32u);
  std::map<std::string, int> kinds;
  for (const auto& c : p.components) ++kinds[c.kind];
  EXPECT_EQ(kinds["V_M"], 1);
  EXPECT_EQ(kinds["V_U29"], 1);
  EXPECT_EQ(kinds["V_I"], 18);
  EXPECT_EQ(kinds["V_J"], 3);
  EXPECT_EQ(kinds["V_pi"], 9);
  auto c = decomposition_report_cactus(preset("cactus14"), "cactus14");
  EXPECT_EQ(c.count(), 8u);
  EXPECT_TRUE(c.upper_bound);
  EXPECT_EQ(decomposition_report_cactus(preset("cycle:3:3"), "cycle").count(), 1u);
  EXPECT_THROW(decomposition_report_cactus(preset("pappus"), "pappus"), Error);
}

TEST(Decomposition, NonNested) {
  for (const std::string n : {"pascal", "pappus"}) {
    auto r = decomposition_report(n);
    EXPECT_TRUE(r.checked_nesting);
    EXPECT_TRUE(r.nested_pairs.empty()) << r.nested_pairs.front();
  }
}

TEST(Decomposition, DependencySets) {
  Config m = preset("qs");
  auto d = small_dependencies(m);
  EXPECT_EQ(d.size(), 4u);
  EXPECT_TRUE(dependencies_contained(m, make_loops(m, {1})));
  EXPECT_FALSE(dependencies_contained(make_loops(m, {1}), m));
}

TEST(CactusRealization, Fixtures) {
  std::vector<Config> cfgs = {preset("cactus14"), preset("line:5"), Config::on_range(6, {{1, 2, 4}, {2, 3, 5}, {1, 3, 6}})};
  for (const auto& c : cfgs) {
    Realization g = cactus_realization(c, 3);
    EXPECT_TRUE(in_realization_space(c, g).member);
    EXPECT_TRUE(all_circuits_vanish(c, g));
    EXPECT_TRUE(all_bases_nonzero(c, g));
  }
  EXPECT_EQ(cactus_realization(cfgs[1], 3).rank(), 2u);
  EXPECT_EQ(cactus_realization(cfgs[2], 3).rank(), 3u);
  EXPECT_THROW(cactus_realization(preset("pappus"), 1), Error);
}

TEST(VerifySuite, DeterministicAcrossWorkers) {
  VerifyOptions a;
  a.samples = 6;
  a.seed = 9;
  a.lifting_limit = 20;
  a.workers = 1;
  VerifyOptions b = a;
  b.workers = 4;
  auto ra = verify_report_json(verify_suite("pascal", preset("pascal"), a), false).dump();
  auto rb = verify_report_json(verify_suite("pascal", preset("pascal"), b), false).dump();
  EXPECT_EQ(ra, rb);
}

TEST(VerifySuite, CactusAndQuadrilateralPass) {
  VerifyOptions o;
  o.samples = 5;
  EXPECT_TRUE(verify_suite("cactus14", preset("cactus14"), o).ok());
  EXPECT_TRUE(verify_suite("qs", preset("qs"), o).ok());
  EXPECT_THROW(verify_suite("fano", preset("fano"), o), Error);
}
