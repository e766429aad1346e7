#include "bracketforge.h"

#include "bracketforge/error.hpp"
#include "bracketforge/io.hpp"
#include "bracketforge/lifting.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

struct bf_config {
  std::string name;
  bracketforge::Config cfg;
};

namespace {

thread_local std::string g_last_error;

bf_status fail(bf_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
bf_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return BF_OK;
  } catch (const bracketforge::Error& e) {
    return fail(static_cast<bf_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(BF_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BF_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BF_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string dump(const bracketforge::Json& j, int pretty) { return pretty ? j.dump(2) : j.dump(); }

void need(const void* p, const char* what) {
  if (!p) throw bracketforge::Error(bracketforge::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

template <class F>
bf_status report(const bf_config* cfg, int pretty, char** out, F&& make) {
  return guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    *out = dup(dump(make(*cfg), pretty));
  });
}

}  // namespace

extern "C" {

const char* bf_last_error(void) { return g_last_error.c_str(); }

void bf_string_free(char* s) { std::free(s); }

bf_status bf_config_from_preset(const char* name, bf_config** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = new bf_config{name, bracketforge::preset(name)};
  });
}

bf_status bf_config_from_json(const char* json, bf_config** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new bf_config{"custom", bracketforge::config_from_json(bracketforge::Json::parse(json))};
  });
}

bf_status bf_config_load(const char* source, bf_config** out) {
  return guarded([&] {
    need(source, "source");
    need(out, "out");
    auto cfg = bracketforge::load_config(source);
    // a file keeps the generic name so that preset-only families do not apply
    std::error_code ec;
    bool file = std::filesystem::is_regular_file(source, ec);
    *out = new bf_config{file ? "custom" : source, std::move(cfg)};
  });
}

void bf_config_free(bf_config* cfg) { delete cfg; }

size_t bf_config_size(const bf_config* cfg) { return cfg ? cfg->cfg.d() : 0; }

bf_status bf_report_describe(const bf_config* cfg, int pretty, char** out) {
  return report(cfg, pretty, out, [](const bf_config& c) { return bracketforge::describe_report(c.cfg, c.name); });
}

bf_status bf_report_cactus_check(const bf_config* cfg, int pretty, char** out) {
  return report(cfg, pretty, out, [](const bf_config& c) { return bracketforge::cactus_report(c.cfg); });
}

bf_status bf_report_ordering(const bf_config* cfg, int pretty, char** out) {
  return report(cfg, pretty, out, [](const bf_config& c) { return bracketforge::ordering_report(c.cfg); });
}

bf_status bf_report_lift_matrix(const bf_config* cfg, int pretty, char** out) {
  return report(cfg, pretty, out, [](const bf_config& c) { return bracketforge::lift_matrix_report(c.cfg); });
}

bf_status bf_report_generators(const bf_config* cfg, const char* family, uint64_t limit, int count_only,
                               size_t depth, int pretty, char** out) {
  return report(cfg, pretty, out, [&](const bf_config& c) {
    bracketforge::GeneratorQuery q;
    q.family = family ? family : "all";
    q.limit = limit;
    q.count_only = count_only != 0;
    q.depth = depth;
    return bracketforge::generators_report(c.cfg, c.name, q);
  });
}

bf_status bf_generator_count(const bf_config* cfg, const char* family, size_t depth, uint64_t* out) {
  return guarded([&] {
    need(cfg, "cfg");
    need(family, "family");
    need(out, "out");
    *out = bracketforge::generator_count(cfg->cfg, cfg->name, family, depth);
  });
}

bf_status bf_report_verify(const bf_config* cfg, size_t samples, uint64_t seed, uint64_t lifting_limit, size_t depth,
                           int timings, int pretty, char** out, int* passed) {
  return report(cfg, pretty, out, [&](const bf_config& c) {
    bracketforge::VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.lifting_limit = lifting_limit;
    opt.depth = depth;
    auto r = bracketforge::verify_suite(c.name, c.cfg, opt);
    if (passed) *passed = r.ok() ? 1 : 0;
    return bracketforge::verify_report_json(r, timings != 0);
  });
}

bf_status bf_report_decompose(const bf_config* cfg, int pretty, char** out) {
  return report(cfg, pretty, out, [](const bf_config& c) { return bracketforge::decompose_report(c.cfg, c.name); });
}

bf_status bf_report_replay(int pretty, char** out, int* passed) {
  return guarded([&] {
    need(out, "out");
    auto r = bracketforge::replay_cactus_counterexample();
    if (passed) *passed = r.ok() ? 1 : 0;
    *out = dup(dump(bracketforge::replay_report_json(r), pretty));
  });
}

bf_status bf_in_circuit_variety(const bf_config* cfg, const char* realization_json, int* member) {
  return guarded([&] {
    need(cfg, "cfg");
    need(realization_json, "realization_json");
    need(member, "member");
    auto g = bracketforge::realization_from_json(bracketforge::Json::parse(realization_json));
    auto r = bracketforge::in_circuit_variety(cfg->cfg, g);
    *member = r.member ? 1 : 0;
    if (!r.member) g_last_error = r.witness;
  });
}

bf_status bf_lift_dim(const bf_config* cfg, const char* realization_json, const char* q0, const char* q1,
                      const char* q2, size_t* out) {
  return guarded([&] {
    need(cfg, "cfg");
    need(realization_json, "realization_json");
    need(q0, "q0");
    need(q1, "q1");
    need(q2, "q2");
    need(out, "out");
    auto g = bracketforge::realization_from_json(bracketforge::Json::parse(realization_json));
    bracketforge::Vec3 q{bracketforge::parse_rational(q0), bracketforge::parse_rational(q1),
                         bracketforge::parse_rational(q2)};
    *out = bracketforge::lift_dim(cfg->cfg, g, q);
  });
}

}  // extern "C"
