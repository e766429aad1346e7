#include "bracketforge/io.hpp"

#include "bracketforge/error.hpp"

#include <filesystem>
#include <fstream>

namespace bracketforge {

namespace {

std::vector<Label> labels_of(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, std::string(what) + " must be an array");
  std::vector<Label> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::Parse, std::string(what) + " entries must be integers");
    out.push_back(x.get<Label>());
  }
  return out;
}

std::vector<std::vector<Label>> label_lists(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, std::string(what) + " must be an array");
  std::vector<std::vector<Label>> out;
  for (const auto& x : j) out.push_back(labels_of(x, what));
  return out;
}

Rational rational_of(const Json& x) {
  if (x.is_number_integer()) return Rational(x.get<long>());
  if (x.is_string()) return parse_rational(x.get<std::string>());
  throw Error(ErrorCode::Parse, "matrix entries must be integers or rational strings");
}

}  // namespace

Config config_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "configuration must be a JSON object");
  std::vector<Label> ground;
  if (j.contains("ground")) {
    ground = labels_of(j["ground"], "ground");
  } else {
    if (!j.contains("d") || !j["d"].is_number_integer()) throw Error(ErrorCode::Parse, "missing integer field 'd'");
    int d = j["d"].get<int>();
    if (d < 0) throw Error(ErrorCode::Parse, "'d' must be nonnegative");
    for (int i = 1; i <= d; ++i) ground.push_back(i);
  }
  if (j.contains("d") && j["d"].get<int>() != static_cast<int>(ground.size()))
    throw Error(ErrorCode::Parse, "'d' disagrees with 'ground'");
  auto lines = j.contains("lines") ? label_lists(j["lines"], "lines") : std::vector<Line>{};
  auto loops = j.contains("loops") ? labels_of(j["loops"], "loops") : std::vector<Label>{};
  auto par = j.contains("parallel") ? label_lists(j["parallel"], "parallel") : std::vector<std::vector<Label>>{};
  return Config(ground, lines, loops, par);
}

Json config_to_json(const Config& cfg) {
  Json j;
  j["d"] = cfg.d();
  j["ground"] = cfg.ground();
  j["lines"] = cfg.lines();
  j["loops"] = cfg.loops();
  j["parallel"] = cfg.nontrivial_parallel_classes();
  return j;
}

Config load_config(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::Io, "cannot read '" + source + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::Parse, "malformed JSON in '" + source + "': " + e.what());
    }
    return config_from_json(j);
  }
  return preset(source);
}

Realization realization_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw Error(ErrorCode::Parse, "realization needs a 'matrix' field");
  const Json& m = j["matrix"];
  if (!m.is_array() || m.size() != 3) throw Error(ErrorCode::Parse, "matrix must have 3 rows");
  std::size_t d = m[0].size();
  for (const auto& row : m)
    if (!row.is_array() || row.size() != d) throw Error(ErrorCode::Parse, "matrix rows must have equal length");
  std::vector<Label> labels;
  if (j.contains("labels")) {
    labels = labels_of(j["labels"], "labels");
    if (labels.size() != d) throw Error(ErrorCode::DimensionMismatch, "labels and matrix disagree");
  } else {
    for (std::size_t i = 1; i <= d; ++i) labels.push_back(static_cast<Label>(i));
  }
  std::vector<Vec3> cols(d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < 3; ++r) cols[c][r] = rational_of(m[r][c]);
  return Realization(labels, cols);
}

Json vec_to_json(const Vec3& v) { return Json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])}); }

Json realization_to_json(const Realization& g) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (const auto& c : g.cols()) row.push_back(to_string(c[r]));
    rows.push_back(row);
  }
  return Json{{"labels", g.labels()}, {"matrix", rows}};
}

}  // namespace bracketforge
