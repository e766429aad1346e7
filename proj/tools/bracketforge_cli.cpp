// Command-line front end over the C interface.

#include "bracketforge.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int exit_for(bf_status s) {
  switch (s) {
    case BF_OK:
      return kExitOk;
    case BF_INVALID_ARGUMENT:
    case BF_PARSE:
    case BF_IO:
    case BF_UNKNOWN_PRESET:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

int report_error(bf_status s) {
  std::cerr << "error: " << bf_last_error() << "\n";
  return exit_for(s);
}

// out is read only after the call that fills it has returned.
int emit(bf_status s, char** out) {
  if (s != BF_OK) return report_error(s);
  std::cout << *out << "\n";
  bf_string_free(*out);
  *out = nullptr;
  return kExitOk;
}

struct Handle {
  bf_config* cfg = nullptr;
  ~Handle() { bf_config_free(cfg); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bracketforge: ideals of rank-three point-line configurations"};
  app.require_subcommand(1);

  std::string config;
  std::string family = "all";
  std::uint64_t limit = 10;
  std::size_t samples = 20, depth = 2;
  std::uint64_t seed = 0;
  std::uint64_t lifting_limit = 200;
  bool pretty = false, count_only = false, timings = false;

  auto with_config = [&](CLI::App* sub) {
    sub->add_option("--config", config, "preset name or path to a JSON configuration")->required();
    sub->add_flag("--pretty", pretty, "indented output");
    return sub;
  };
  auto* describe = with_config(app.add_subcommand("describe", "lines, circuits, degrees and chains"));
  auto* cactus = with_config(app.add_subcommand("cactus-check", "cactus recognition and G(M)"));
  auto* ordering = with_config(app.add_subcommand("ordering", "admissible ordering and dimension"));
  auto* lift = with_config(app.add_subcommand("lift-matrix", "liftability matrix with symbolic q"));
  auto* gens = with_config(app.add_subcommand("generators", "generator families and counts"));
  gens->add_option("--family", family, "circuit|gc|lifting|all")
      ->check(CLI::IsMember({"circuit", "gc", "lifting", "all"}));
  gens->add_option("--limit", limit, "how many polynomials / descriptors to list");
  gens->add_flag("--count-only", count_only, "counts only");
  gens->add_option("--depth", depth, "G_M rewrite depth");
  auto* verify = with_config(app.add_subcommand("verify", "vanishing suite on sampled realizations"));
  verify->add_option("--samples", samples, "number of realizations");
  verify->add_option("--seed", seed, "seed");
  verify->add_option("--limit", lifting_limit, "lifting descriptors sampled");
  verify->add_option("--depth", depth, "G_M rewrite depth");
  verify->add_flag("--timings", timings, "include wall time (output no longer reproducible)");
  auto* decompose = with_config(app.add_subcommand("decompose", "irreducible decomposition report"));
  auto* replay = app.add_subcommand("replay-counterexample", "the 14-point computation");
  replay->add_flag("--pretty", pretty, "indented output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  int p = pretty ? 1 : 0;
  char* out = nullptr;
  if (*replay) {
    int passed = 0;
    int rc = emit(bf_report_replay(p, &out, &passed), &out);
    return rc != kExitOk ? rc : passed ? kExitOk : kExitFailure;
  }

  Handle h;
  if (bf_status s = bf_config_load(config.c_str(), &h.cfg); s != BF_OK) return report_error(s);

  if (*describe) return emit(bf_report_describe(h.cfg, p, &out), &out);
  if (*cactus) return emit(bf_report_cactus_check(h.cfg, p, &out), &out);
  if (*ordering) return emit(bf_report_ordering(h.cfg, p, &out), &out);
  if (*lift) return emit(bf_report_lift_matrix(h.cfg, p, &out), &out);
  if (*decompose) return emit(bf_report_decompose(h.cfg, p, &out), &out);
  if (*gens) {
    if (count_only && family != "all") {
      std::uint64_t n = 0;
      if (bf_status s = bf_generator_count(h.cfg, family.c_str(), depth, &n); s != BF_OK) return report_error(s);
      std::cout << n << "\n";
      return kExitOk;
    }
    return emit(bf_report_generators(h.cfg, family.c_str(), limit, count_only ? 1 : 0, depth, p, &out), &out);
  }
  if (*verify) {
    int passed = 0;
    int rc = emit(bf_report_verify(h.cfg, samples, seed, lifting_limit, depth, timings ? 1 : 0, p, &out, &passed), &out);
    return rc != kExitOk ? rc : passed ? kExitOk : kExitFailure;
  }
  return kExitUsage;
}
