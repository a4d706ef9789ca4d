#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "halysim/population.hpp"

namespace halysim {

// Parse the JSON config document. Omitted keys keep the documented defaults,
// unknown keys are rejected by name, and constraint violations surface as
// ConfigError naming the field. A blank document means all defaults.
//
// Schema (all keys optional):
//   n            integer >= 1
//   dt           number > 0
//   omega        number > 0, a whole multiple of dt
//   x0           number in (0, 1]
//   seed         unsigned 64-bit integer
//   alpha, beta  numbers (log-hazard intercept and slope)
//   sigma_scale  number >= 0
//   drift_knots  nonempty list of [age, value] pairs, ages strictly increasing
SimConfig parse_config(std::string_view text);

SimConfig load_config_file(const std::filesystem::path& path);

// Exact echo: parse_config(config_to_json(c).dump()) reproduces c.
nlohmann::ordered_json config_to_json(const SimConfig& config);

}  // namespace halysim
