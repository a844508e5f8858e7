#pragma once

#include "yaglom/euclid.hpp"

#include <cstdint>

namespace yaglom {

/// Finite code on the unit sphere S^n of R^(n+1).
struct SphericalCodeResult {
  /// One unit vector per row, dimension n+1.
  PointSet points;
  /// Measured squared minimum distance (+inf for a single point).
  double rho = 0.0;
  /// Guaranteed squared minimum distance d_floor / (n a).
  double rho_floor = 0.0;
  /// log2 |X| / (n+1).
  double binary_rate = 0.0;
};

/// Embeds the words through the constellation, lifts the ball of radius
/// sqrt(n a) onto its sphere and rescales to the unit sphere.
SphericalCodeResult to_spherical(const Constellation& alphabet, const CodeBook& words, std::int64_t d_floor,
                                 unsigned workers = 1);

}  // namespace yaglom
