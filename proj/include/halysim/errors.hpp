#pragma once

#include <stdexcept>

namespace halysim {

// Invalid or inconsistent simulation configuration (bad key, bad value,
// violated constraint). Messages name the offending field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failure to read or write an output artifact; messages carry the path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace halysim
