#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>

#include "defect_robust/angles.hpp"
#include "defect_robust/charge.hpp"
#include "defect_robust/orientation_field.hpp"

namespace defect_robust {

/// Pure phase-winding defect: theta(p) = q * atan2(p - center) + phase.
struct DefectSpec {
  Charge charge = Charge::from_halves(1);
  Eigen::Vector2d center = Eigen::Vector2d::Zero();  // field units
  double phase = 0;
};

/// Uniform angle noise on [-amplitude, amplitude], keyed by seed.
struct NoiseSpec {
  double amplitude = 0;
  std::uint64_t seed = 0;
};

/// Samples the defect field on an nx x ny grid with spacing h.
/// Throws DegenerateCenter if the center coincides with a grid vertex and
/// std::invalid_argument if it lies outside the grid or the charge is not an
/// integer in polar mode.
OrientationField synth_defect_field(const DefectSpec& spec, int nx, int ny, double h = 1.0,
                                    PeriodMode mode = PeriodMode::Nematic);

/// Perturbation applied to flattened vertex `index`.
double noise_offset(const NoiseSpec& noise, std::size_t index);

/// Returns a copy with every angle shifted by noise_offset and
/// canonicalized. Requires 0 <= amplitude < P/2.
OrientationField add_noise(const OrientationField& field, const NoiseSpec& noise);

}  // namespace defect_robust
