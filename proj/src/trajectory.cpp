#include "halysim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace halysim {

double haly_integral(std::span<const double> values, double tau, double dt) {
  if (values.empty()) throw std::invalid_argument("haly_integral: empty path");
  if (!(dt > 0.0)) throw std::invalid_argument("haly_integral: dt must be positive");
  if (!(tau >= 0.0)) throw std::invalid_argument("haly_integral: tau must be nonnegative");

  // Last grid index at or before tau; snap up across round-off so an on-grid
  // tau is treated as whole steps.
  const double ratio = tau / dt;
  auto last = static_cast<std::size_t>(ratio);
  if (static_cast<double>(last + 1) - ratio < 1e-9 * std::max(1.0, ratio)) ++last;
  last = std::min(last, values.size() - 1);

  double twice_sum = 0.0;
  for (std::size_t k = 0; k < last; ++k) twice_sum += values[k] + values[k + 1];
  double integral = 0.5 * dt * twice_sum;

  const double partial = tau - static_cast<double>(last) * dt;
  if (partial > 0.0) integral += values[last] * partial;
  return integral;
}

}  // namespace halysim
