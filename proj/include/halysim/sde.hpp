#pragma once

#include <algorithm>
#include <cmath>

#include "halysim/drift_table.hpp"

namespace halysim {

struct DiffusionParams {
  double scale = 0.05;  // dimensionless noise amplitude
  bool operator==(const DiffusionParams&) const = default;
};

// b(t, x) = x * delta(t): proportional decline at the age-dependent rate.
inline double drift_rate(double x, double delta) { return x * delta; }

inline double drift(double t, double x, const DriftTable& table) {
  return drift_rate(x, table.value_at(t));
}

// sigma(x) = scale * sqrt((1 - x) x); vanishes at both ends of [0, 1]. The
// inner max() absorbs round-off excursions just outside the unit interval.
inline double diffusion(double x, const DiffusionParams& params) {
  return params.scale * std::sqrt(std::max(0.0, (1.0 - x) * x));
}

// One explicit Euler-Maruyama step with the Brownian increment realised as
// sqrt(dt) * z; drift and diffusion are both evaluated at the step start and
// the result is clamped back into [0, 1].
inline double euler_maruyama_step_at(double x, double delta, double dt, double sqrt_dt,
                                     double z, const DiffusionParams& params) {
  const double next = x + drift_rate(x, delta) * dt + diffusion(x, params) * sqrt_dt * z;
  return std::clamp(next, 0.0, 1.0);
}

inline double euler_maruyama_step(double t, double x, double dt, double z,
                                  const DriftTable& table, const DiffusionParams& params) {
  return euler_maruyama_step_at(x, table.value_at(t), dt, std::sqrt(dt), z, params);
}

}  // namespace halysim
