#include "halysim/hazard.hpp"

#include <algorithm>
#include <stdexcept>

namespace halysim {

double draw_threshold(double u) {
  if (!(u > 0.0) || !(u < 1.0))
    throw std::invalid_argument("threshold draw requires u in (0, 1)");
  return -std::log(u);
}

std::optional<double> locate_death(double t, double dt, double lambda_before,
                                   double lambda_after, double threshold) {
  if (lambda_after < threshold) return std::nullopt;
  if (lambda_after == lambda_before) return t;
  const double frac = (threshold - lambda_before) / (lambda_after - lambda_before);
  return t + dt * std::clamp(frac, 0.0, 1.0);
}

double frozen_covariate_survival(double t, double x_frozen, const HazardParams& params) {
  const double inv_sqrt_x = 1.0 / std::sqrt(x_frozen);
  const double cumulative =
      params.beta == 0.0
          ? std::exp(params.alpha) * t * inv_sqrt_x
          : (std::exp(params.alpha + params.beta * t) - std::exp(params.alpha)) /
                params.beta * inv_sqrt_x;
  return std::exp(-cumulative);
}

}  // namespace halysim
