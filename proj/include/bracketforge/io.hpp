#pragma once

// JSON input and the report documents behind every CLI subcommand.

#include "bracketforge/config.hpp"
#include "bracketforge/realization.hpp"
#include "bracketforge/verify.hpp"

#include <json.hpp>

#include <string>

namespace bracketforge {

using Json = nlohmann::ordered_json;

// {"d": 9, "lines": [[1,2,3], ...], "loops": [], "parallel": [[..]], "ground": [..]}
Config config_from_json(const Json& j);
Json config_to_json(const Config& cfg);
// A preset name, or a path to a JSON file when one exists there.
Config load_config(const std::string& source);

// {"labels": [..], "matrix": [[row0], [row1], [row2]]}; entries are ints or rational strings.
Realization realization_from_json(const Json& j);
Json realization_to_json(const Realization& g);
Json vec_to_json(const Vec3& v);

Json describe_report(const Config& cfg, const std::string& name);
Json cactus_report(const Config& cfg);
Json ordering_report(const Config& cfg);
Json lift_matrix_report(const Config& cfg);

struct GeneratorQuery {
  std::string family = "all";  // circuit, gc, lifting, all
  std::uint64_t limit = 10;    // lifting descriptors / gc polynomials listed
  bool count_only = false;
  std::size_t depth = 2;
};
Json generators_report(const Config& cfg, const std::string& name, const GeneratorQuery& q);
// Count for a single family, without materializing anything that is not needed.
std::uint64_t generator_count(const Config& cfg, const std::string& name, const std::string& family, std::size_t depth);

Json verify_report_json(const VerifyReport& r, bool timings);
Json decompose_report(const Config& cfg, const std::string& name);
Json replay_report_json(const ReplayReport& r);

}  // namespace bracketforge
