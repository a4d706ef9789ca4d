#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "halysim/drift_table.hpp"
#include "halysim/errors.hpp"
#include "halysim/hazard.hpp"
#include "halysim/quantiles.hpp"
#include "halysim/rng.hpp"
#include "halysim/sde.hpp"
#include "halysim/trajectory.hpp"

namespace halysim {

// All simulation knobs. Every runner validates before use.
struct SimConfig {
  std::int64_t n = 1000;   // individuals
  double dt = 0.01;        // step size, years
  double omega = 110.0;    // horizon; alive at omega counts as death at omega
  double x0 = 0.95;        // initial HRQoL, in (0, 1]
  std::uint64_t seed = 42; // master seed; individual i draws from substream (seed, i)
  HazardParams hazard{};
  DiffusionParams diffusion{};
  DriftTable drift = DriftTable::default_table();

  std::size_t grid_steps() const;  // omega / dt, validated to be whole
  void validate() const;           // throws ConfigError naming the field

  bool operator==(const SimConfig&) const = default;
};

// Per-step coefficients shared by every individual of a run: the drift rate
// and baseline hazard evaluated at each step start.
struct StepGrid {
  double dt = 0.0;
  double sqrt_dt = 0.0;
  std::vector<double> delta;
  std::vector<double> h0;

  std::size_t steps() const { return delta.size(); }
  static StepGrid from_config(const SimConfig& config);
};

// One coupled SDE/hazard trajectory.
//
// Draw order per stream: the Exp(1) threshold first, then one normal per
// survived step. Each step evaluates the hazard at the step start, advances
// the cumulative hazard by the left-rectangle rule, and checks the threshold
// before stepping the SDE; the death instant interpolates the crossing
// within the step. An individual still alive at omega is assigned
// tau = omega.
template <RandomStream S>
Trajectory simulate_individual(const SimConfig& config, const StepGrid& grid, S& stream) {
  const std::size_t steps = grid.steps();
  Trajectory out;
  out.values.resize(steps + 1);

  HazardAccumulator hazard{0.0, draw_threshold(stream.uniform_open())};
  double x = config.x0;
  out.values[0] = x;

  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * grid.dt;
    const double lambda_before = hazard.cumulative;
    hazard.advance(covariate_hazard_from_h0(grid.h0[k], x), grid.dt);
    if (hazard.crossed()) {
      const std::optional<double> tau =
          locate_death(t, grid.dt, lambda_before, hazard.cumulative, hazard.threshold);
      out.tau = *tau;
      out.x_at_death = x;
      // values[k + 1 ..] stay zero: the stopped process past tau.
      out.haly = haly_integral(out.values, out.tau, grid.dt);
      return out;
    }
    x = euler_maruyama_step_at(x, grid.delta[k], grid.dt, grid.sqrt_dt, stream.normal(),
                               config.diffusion);
    out.values[k + 1] = x;
  }

  // Censored at the horizon. The integral still counts the final step in
  // full, so it is taken before the value at omega is stopped to zero.
  out.tau = config.omega;
  out.x_at_death = out.values[steps - 1];
  out.haly = haly_integral(out.values, out.tau, grid.dt);
  out.values[steps] = 0.0;
  return out;
}

template <RandomStream S>
Trajectory simulate_individual(const SimConfig& config, S& stream) {
  return simulate_individual(config, StepGrid::from_config(config), stream);
}

struct PopulationSummary {
  QuantileTriple life_expectancy;  // of tau
  QuantileTriple hrqol_at_death;   // of x_at_death
  QuantileTriple haly;             // of per-individual HALY
  bool operator==(const PopulationSummary&) const = default;
};

struct PopulationResult {
  std::vector<Trajectory> trajectories;
  PopulationSummary summary;
  QuantileCurves curves;  // pointwise quartiles over the grid
  double dt = 0.0;
  bool operator==(const PopulationResult&) const = default;
};

// n independent trajectories from substreams (seed, 0..n-1), reduced to the
// summary triples and quartile curves. Output is bit-identical for a fixed
// config regardless of thread count; the parallel runner distributes
// individuals and grid columns over OpenMP threads.
PopulationResult simulate_population(const SimConfig& config);

// Plain single-thread reference of the same contract, kept for testing the
// parallel kernels against.
PopulationResult simulate_population_serial(const SimConfig& config);

}  // namespace halysim
