#include "defect_robust/synthesis.hpp"

#include <cmath>
#include <stdexcept>

#include "defect_robust/random.hpp"

namespace defect_robust {

OrientationField synth_defect_field(const DefectSpec& spec, int nx, int ny, double h,
                                    PeriodMode mode) {
  OrientationField field(nx, ny, h, mode);
  if (mode == PeriodMode::Polar && !spec.charge.is_integer())
    throw std::invalid_argument("polar fields need an integer charge");
  const Eigen::Vector2d& c = spec.center;
  if (!c.allFinite() || c.x() < 0 || c.y() < 0 || c.x() > (nx - 1) * h || c.y() > (ny - 1) * h)
    throw std::invalid_argument("defect center outside the grid");

  const double q = spec.charge.value();
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double dx = i * h - c.x();
      const double dy = j * h - c.y();
      if (dx == 0 && dy == 0)
        throw DegenerateCenter("defect center coincides with grid vertex (" + std::to_string(i) +
                               ", " + std::to_string(j) + ")");
      field.set(i, j, q * std::atan2(dy, dx) + spec.phase);
    }
  }
  return field;
}

double noise_offset(const NoiseSpec& noise, std::size_t index) {
  const double u = counter_uniform(noise.seed, static_cast<std::uint64_t>(index));
  return noise.amplitude * (2.0 * u - 1.0);
}

OrientationField add_noise(const OrientationField& field, const NoiseSpec& noise) {
  if (!(noise.amplitude >= 0) || noise.amplitude >= period(field.mode()) / 2)
    throw std::invalid_argument("noise amplitude must lie in [0, P/2)");
  OrientationField out = field;
  if (noise.amplitude == 0) return out;
  for (int j = 0; j < field.ny(); ++j)
    for (int i = 0; i < field.nx(); ++i)
      out.set(i, j, field(i, j) + noise_offset(noise, field.index(i, j)));
  return out;
}

}  // namespace defect_robust
