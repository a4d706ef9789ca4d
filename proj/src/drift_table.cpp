#include "halysim/drift_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace halysim {

DriftTable::DriftTable(std::vector<DriftKnot> knots) : knots_(std::move(knots)) {
  if (knots_.empty()) throw std::invalid_argument("drift table needs at least one knot");
  double prev = -1.0;
  for (const auto& knot : knots_) {
    if (!std::isfinite(knot.age) || knot.age < 0.0 || knot.age > kMaxKnotAge)
      throw std::invalid_argument("drift table knot ages must lie in [0, 150]");
    if (knot.age <= prev)
      throw std::invalid_argument("drift table knot ages must be strictly increasing");
    if (!std::isfinite(knot.value))
      throw std::invalid_argument("drift table knot values must be finite");
    prev = knot.age;
  }
}

double DriftTable::value_at(double age) const {
  if (age <= knots_.front().age) return knots_.front().value;
  if (age >= knots_.back().age) return knots_.back().value;
  const auto upper = std::upper_bound(
      knots_.begin(), knots_.end(), age,
      [](double a, const DriftKnot& k) { return a < k.age; });
  const auto lower = upper - 1;
  if (age == lower->age) return lower->value;
  const double w = (age - lower->age) / (upper->age - lower->age);
  return lower->value + w * (upper->value - lower->value);
}

DriftTable DriftTable::default_table() {
  // Bathtub-style profile: a brief infancy dip, a near-flat decline through
  // midlife, then a strongly decreasing tail past 85. The age-0 value also
  // pins the step-size sensitivity of the integrated path, so it is part of
  // the calibration.
  return DriftTable{{
      {0.0, -0.0062},
      {1.0, -0.0005},
      {50.0, -0.002},
      {70.0, -0.0095},
      {85.0, -0.038},
      {95.0, -0.11},
      {110.0, -0.18},
  }};
}

}  // namespace halysim
