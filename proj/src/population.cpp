#include "halysim/population.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace halysim {

namespace {

std::optional<std::size_t> whole_steps(double omega, double dt) {
  const double ratio = omega / dt;
  const auto rounded = std::llround(ratio);
  if (rounded < 1) return std::nullopt;
  if (std::abs(ratio - static_cast<double>(rounded)) > 1e-8 * std::max(1.0, ratio))
    return std::nullopt;
  return static_cast<std::size_t>(rounded);
}

PopulationSummary make_summary(const std::vector<Trajectory>& trajectories) {
  std::vector<double> taus, x_deaths, halys;
  taus.reserve(trajectories.size());
  x_deaths.reserve(trajectories.size());
  halys.reserve(trajectories.size());
  for (const auto& trajectory : trajectories) {
    taus.push_back(trajectory.tau);
    x_deaths.push_back(trajectory.x_at_death);
    halys.push_back(trajectory.haly);
  }
  return {quartile_triple(std::move(taus)), quartile_triple(std::move(x_deaths)),
          quartile_triple(std::move(halys))};
}

// Column-blocked quartile curves. Gathering a block of grid ages per pass
// keeps the reads through the trajectory buffers sequential; each column is
// then sorted independently, so the result does not depend on scheduling.
QuantileCurves quartile_curves_blocked(const std::vector<Trajectory>& trajectories) {
  const std::size_t n = trajectories.size();
  const std::size_t grid = trajectories.front().values.size();
  constexpr std::size_t kBlock = 64;

  QuantileCurves curves{std::vector<double>(grid), std::vector<double>(grid),
                        std::vector<double>(grid)};
  std::vector<double> block(kBlock * n);
  for (std::size_t start = 0; start < grid; start += kBlock) {
    const std::size_t width = std::min(kBlock, grid - start);
    for (std::size_t i = 0; i < n; ++i) {
      const double* values = trajectories[i].values.data() + start;
      for (std::size_t j = 0; j < width; ++j) block[j * n + i] = values[j];
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(width); ++j) {
      double* column = block.data() + static_cast<std::size_t>(j) * n;
      std::sort(column, column + n);
      const std::span<const double> sorted(column, n);
      const std::size_t k = start + static_cast<std::size_t>(j);
      curves.q25[k] = quantile_sorted(sorted, 0.25);
      curves.q50[k] = quantile_sorted(sorted, 0.5);
      curves.q75[k] = quantile_sorted(sorted, 0.75);
    }
  }
  return curves;
}

}  // namespace

std::size_t SimConfig::grid_steps() const {
  const auto steps = whole_steps(omega, dt);
  return steps ? *steps : 0;
}

void SimConfig::validate() const {
  if (n < 1) throw ConfigError("n must be at least 1");
  if (!std::isfinite(dt) || !(dt > 0.0)) throw ConfigError("dt must be positive and finite");
  if (!std::isfinite(omega) || !(omega > 0.0))
    throw ConfigError("omega must be positive and finite");
  if (!whole_steps(omega, dt))
    throw ConfigError("omega must be a whole number of dt steps (omega=" +
                      std::to_string(omega) + ", dt=" + std::to_string(dt) + ")");
  if (!std::isfinite(x0) || !(x0 > 0.0) || !(x0 <= 1.0))
    throw ConfigError("x0 must lie in (0, 1]");
  if (!std::isfinite(hazard.alpha)) throw ConfigError("alpha must be finite");
  if (!std::isfinite(hazard.beta)) throw ConfigError("beta must be finite");
  if (!std::isfinite(diffusion.scale) || diffusion.scale < 0.0)
    throw ConfigError("sigma_scale must be nonnegative and finite");
}

StepGrid StepGrid::from_config(const SimConfig& config) {
  config.validate();
  StepGrid grid;
  grid.dt = config.dt;
  grid.sqrt_dt = std::sqrt(config.dt);
  const std::size_t steps = config.grid_steps();
  grid.delta.resize(steps);
  grid.h0.resize(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * config.dt;
    grid.delta[k] = config.drift.value_at(t);
    grid.h0[k] = baseline_hazard(t, config.hazard);
  }
  return grid;
}

PopulationResult simulate_population_serial(const SimConfig& config) {
  config.validate();
  const StepGrid grid = StepGrid::from_config(config);
  std::vector<Trajectory> trajectories(static_cast<std::size_t>(config.n));
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    RngStream stream(config.seed, i);
    trajectories[i] = simulate_individual(config, grid, stream);
  }
  PopulationResult result;
  result.dt = config.dt;
  result.summary = make_summary(trajectories);
  result.curves = quartile_curves(trajectories);
  result.trajectories = std::move(trajectories);
  return result;
}

PopulationResult simulate_population(const SimConfig& config) {
  config.validate();
  const StepGrid grid = StepGrid::from_config(config);
  std::vector<Trajectory> trajectories(static_cast<std::size_t>(config.n));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < config.n; ++i) {
    RngStream stream(config.seed, static_cast<std::uint64_t>(i));
    trajectories[static_cast<std::size_t>(i)] = simulate_individual(config, grid, stream);
  }
  PopulationResult result;
  result.dt = config.dt;
  result.summary = make_summary(trajectories);
  result.curves = quartile_curves_blocked(trajectories);
  result.trajectories = std::move(trajectories);
  return result;
}

}  // namespace halysim
