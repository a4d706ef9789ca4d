#pragma once

#include <span>
#include <vector>

#include "halysim/trajectory.hpp"

namespace halysim {

// Type-7 quantile of an ascending-sorted sample: linear interpolation
// between the order statistics at rank (n - 1) * p. Throws on an empty
// sample or p outside [0, 1].
double quantile_sorted(std::span<const double> sorted, double p);

// Sorts a copy, then quantile_sorted.
double quantile(std::vector<double> values, double p);

struct QuantileTriple {
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  bool operator==(const QuantileTriple&) const = default;
};

// (median, q25, q75) of a sample, sorted once.
QuantileTriple quartile_triple(std::vector<double> values);

// Pointwise quantiles of the stopped paths: one output row per probability,
// each with a value at every grid age. Deceased individuals contribute their
// zeros. All trajectories must share one grid.
std::vector<std::vector<double>> pointwise_quantiles(std::span<const Trajectory> trajectories,
                                                     std::span<const double> probs);

struct QuantileCurves {
  std::vector<double> q25;
  std::vector<double> q50;
  std::vector<double> q75;
  bool operator==(const QuantileCurves&) const = default;
};

QuantileCurves quartile_curves(std::span<const Trajectory> trajectories);

}  // namespace halysim
