#pragma once

#include <vector>

namespace halysim {

struct DriftKnot {
  double age;    // years
  double value;  // per-year rate
  bool operator==(const DriftKnot&) const = default;
};

// Piecewise-linear age profile of the per-year drift rate delta(t).
//
// Evaluation interpolates between bracketing knots and clamps to the first
// or last knot value outside the covered range. Knots are validated once at
// construction: at least one knot, strictly increasing ages within
// [0, kMaxKnotAge], all values finite.
class DriftTable {
 public:
  static constexpr double kMaxKnotAge = 150.0;

  explicit DriftTable(std::vector<DriftKnot> knots);

  // Clamped linear interpolation; exact at knots.
  double value_at(double age) const;

  const std::vector<DriftKnot>& knots() const { return knots_; }

  // Shipped default: a shallow decline through midlife that steepens past
  // age 85. Values were fixed by calibrating the default configuration
  // against the reference summary statistics listed in the README.
  static DriftTable default_table();

  bool operator==(const DriftTable&) const = default;

 private:
  std::vector<DriftKnot> knots_;
};

}  // namespace halysim
