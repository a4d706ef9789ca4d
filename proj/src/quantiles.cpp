#include "halysim/quantiles.hpp"

#include <algorithm>
#include <stdexcept>

namespace halysim {

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile probability outside [0, 1]");
  const double rank = static_cast<double>(sorted.size() - 1) * p;
  const auto lower = static_cast<std::size_t>(rank);
  const double frac = rank - static_cast<double>(lower);
  if (frac == 0.0 || lower + 1 == sorted.size()) return sorted[lower];
  return sorted[lower] + frac * (sorted[lower + 1] - sorted[lower]);
}

double quantile(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  return quantile_sorted(values, p);
}

QuantileTriple quartile_triple(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return {quantile_sorted(values, 0.5), quantile_sorted(values, 0.25),
          quantile_sorted(values, 0.75)};
}

std::vector<std::vector<double>> pointwise_quantiles(std::span<const Trajectory> trajectories,
                                                     std::span<const double> probs) {
  if (trajectories.empty()) throw std::invalid_argument("pointwise quantiles of an empty population");
  const std::size_t grid = trajectories.front().values.size();
  for (const auto& trajectory : trajectories)
    if (trajectory.values.size() != grid)
      throw std::invalid_argument("pointwise quantiles require a shared grid");

  std::vector<std::vector<double>> curves(probs.size(), std::vector<double>(grid));
  std::vector<double> column(trajectories.size());
  for (std::size_t k = 0; k < grid; ++k) {
    for (std::size_t i = 0; i < trajectories.size(); ++i) column[i] = trajectories[i].values[k];
    std::sort(column.begin(), column.end());
    for (std::size_t p = 0; p < probs.size(); ++p) curves[p][k] = quantile_sorted(column, probs[p]);
  }
  return curves;
}

QuantileCurves quartile_curves(std::span<const Trajectory> trajectories) {
  const double probs[] = {0.25, 0.5, 0.75};
  auto rows = pointwise_quantiles(trajectories, probs);
  return {std::move(rows[0]), std::move(rows[1]), std::move(rows[2])};
}

}  // namespace halysim
