#pragma once

#include <cmath>
#include <random>

#include "defect_robust/orientation_field.hpp"
#include "defect_robust/templates.hpp"

namespace defect_robust::testing {

inline OrientationField random_field(std::mt19937_64& rng, int nx, int ny,
                                     PeriodMode mode = PeriodMode::Nematic) {
  std::uniform_real_distribution<double> angle(0.0, period(mode));
  OrientationField f(nx, ny, 1.0, mode);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) f.set(i, j, angle(rng));
  return f;
}

inline OrientationField constant_field(int nx, int ny, double theta,
                                       PeriodMode mode = PeriodMode::Nematic) {
  OrientationField f(nx, ny, 1.0, mode);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) f.set(i, j, theta);
  return f;
}

// Angle between the vectors from c to a and from c to b, via the dot
// product; independent of the atan2 route used by the library.
inline double subtended_acos(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                             const Eigen::Vector2d& c) {
  const Eigen::Vector2d u = (a - c).normalized(), v = (b - c).normalized();
  return std::acos(std::clamp(u.dot(v), -1.0, 1.0));
}

}  // namespace defect_robust::testing
