#include "halysim/config_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <string>

namespace halysim {

namespace {

using nlohmann::json;

bool blank(std::string_view text) {
  return text.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

double require_number(const json& value, const char* key) {
  if (!value.is_number()) throw ConfigError(std::string(key) + " must be a number");
  return value.get<double>();
}

std::vector<DriftKnot> parse_knots(const json& value) {
  if (!value.is_array() || value.empty())
    throw ConfigError("drift_knots must be a nonempty list of [age, value] pairs");
  std::vector<DriftKnot> knots;
  knots.reserve(value.size());
  for (const auto& entry : value) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw ConfigError("drift_knots entries must be [age, value] number pairs");
    knots.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  return knots;
}

}  // namespace

SimConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(blank(text) ? std::string_view("{}") : text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

  static constexpr std::array<std::string_view, 9> known = {
      "n", "dt", "omega", "x0", "seed", "alpha", "beta", "sigma_scale", "drift_knots"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ConfigError("unknown config key: " + it.key());

  SimConfig config;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() && !doc["n"].is_number_unsigned())
      throw ConfigError("n must be an integer");
    config.n = doc["n"].get<std::int64_t>();
  }
  if (doc.contains("dt")) config.dt = require_number(doc["dt"], "dt");
  if (doc.contains("omega")) config.omega = require_number(doc["omega"], "omega");
  if (doc.contains("x0")) config.x0 = require_number(doc["x0"], "x0");
  if (doc.contains("seed")) {
    const auto& seed = doc["seed"];
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
      throw ConfigError("seed must be a nonnegative integer");
    config.seed = seed.get<std::uint64_t>();
  }
  if (doc.contains("alpha")) config.hazard.alpha = require_number(doc["alpha"], "alpha");
  if (doc.contains("beta")) config.hazard.beta = require_number(doc["beta"], "beta");
  if (doc.contains("sigma_scale"))
    config.diffusion.scale = require_number(doc["sigma_scale"], "sigma_scale");
  if (doc.contains("drift_knots")) {
    try {
      config.drift = DriftTable(parse_knots(doc["drift_knots"]));
    } catch (const std::invalid_argument& err) {
      throw ConfigError(std::string("drift_knots: ") + err.what());
    }
  }
  config.validate();
  return config;
}

SimConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

nlohmann::ordered_json config_to_json(const SimConfig& config) {
  nlohmann::ordered_json doc;
  doc["n"] = config.n;
  doc["dt"] = config.dt;
  doc["omega"] = config.omega;
  doc["x0"] = config.x0;
  doc["seed"] = config.seed;
  doc["alpha"] = config.hazard.alpha;
  doc["beta"] = config.hazard.beta;
  doc["sigma_scale"] = config.diffusion.scale;
  auto knots = nlohmann::ordered_json::array();
  for (const auto& knot : config.drift.knots())
    knots.push_back(nlohmann::ordered_json::array({knot.age, knot.value}));
  doc["drift_knots"] = std::move(knots);
  return doc;
}

}  // namespace halysim
