#pragma once

#include <span>
#include <vector>

namespace halysim {

// One stopped path on the simulation grid: values[k] is HRQoL at age k * dt,
// exactly 0 at every grid point at or past tau.
struct Trajectory {
  std::vector<double> values;
  double tau = 0.0;         // death age, years
  double x_at_death = 0.0;  // grid value at the last step start before tau
  double haly = 0.0;        // integral of the stopped path, years

  bool operator==(const Trajectory&) const = default;
};

// Integral of a path over [0, tau]: trapezoids over whole grid steps, plus a
// rectangle of the last pre-death value over the final partial interval. The
// rectangle rule reflects the jump to zero at tau; averaging against zero
// would undercount every death by half a step. A tau that lands on the grid
// (within round-off) integrates as whole steps only.
double haly_integral(std::span<const double> values, double tau, double dt);

}  // namespace halysim
