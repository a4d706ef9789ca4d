#pragma once

#include <cmath>
#include <optional>

namespace halysim {

struct HazardParams {
  double alpha = -11.175;  // log-hazard intercept
  double beta = 0.1;       // log-hazard slope, per year
  bool operator==(const HazardParams&) const = default;
};

// A clamped path can sit at exactly 0 before the death threshold fires; the
// hazard is then evaluated at this floor instead of dividing by zero.
inline constexpr double kQolHazardFloor = 1e-6;

// h0(t) = exp(alpha + beta t), strictly positive.
inline double baseline_hazard(double t, const HazardParams& params) {
  return std::exp(params.alpha + params.beta * t);
}

inline double covariate_hazard_from_h0(double h0, double x) {
  return h0 / std::sqrt(std::max(x, kQolHazardFloor));
}

// h(t) = h0(t) / sqrt(x): reduced quality of life raises mortality, with
// equality to the baseline only at x = 1.
inline double covariate_hazard(double t, double x, const HazardParams& params) {
  return covariate_hazard_from_h0(baseline_hazard(t, params), x);
}

// Exp(1) threshold from a uniform draw. Death at
// tau = inf{t : Lambda(t) >= E} is exactly inverse-CDF sampling of the
// survival time for a time-varying hazard. Throws std::invalid_argument for
// u outside the open interval (0, 1).
double draw_threshold(double u);

// Running integral of the hazard along one path, with its fixed threshold.
struct HazardAccumulator {
  double cumulative = 0.0;
  double threshold = 0.0;

  // Left-rectangle quadrature: Lambda += h * dt.
  void advance(double h, double dt) { cumulative += h * dt; }
  bool crossed() const { return cumulative >= threshold; }
};

// Death instant inside [t, t + dt], located by linear interpolation of the
// cumulative hazard; empty when the threshold is not reached by t + dt.
std::optional<double> locate_death(double t, double dt, double lambda_before,
                                   double lambda_after, double threshold);

// Closed-form survival S(t) for a covariate frozen at x_frozen. This is the
// independent check for the step-by-step sampler; production code never
// calls it.
double frozen_covariate_survival(double t, double x_frozen, const HazardParams& params);

}  // namespace halysim
