#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "defect_robust/angles.hpp"
#include "defect_robust/charge.hpp"
#include "defect_robust/lattice_path.hpp"
#include "defect_robust/orientation_field.hpp"

namespace defect_robust {

/// Largest admissible |raw_sum - q 2 pi| before the sum is declared corrupt.
inline constexpr double kQuantizationTolerance = 1e-6;

template <typename Scalar>
struct BasicChargeEstimate {
  Charge charge;
  Eigen::Matrix<Scalar, 2, 1> anchor;  // path vertex centroid, field units
  Scalar raw_sum;
  Scalar residual;  // raw_sum - charge * 2 pi
};

template <typename Scalar>
struct BasicRobustnessReport {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> per_edge;
  Scalar path_robustness;
  std::size_t weakest_edge;  // first edge attaining the minimum
  std::optional<Scalar> normalized;
};

using ChargeEstimate = BasicChargeEstimate<double>;
using RobustnessReport = BasicRobustnessReport<double>;

namespace detail {

template <typename Scalar>
void require_evaluable(const BasicOrientationField<Scalar>& field, const LatticePath& path) {
  if (!path.closed()) throw InvalidPath("path must be closed");
  if (path.num_edges() < 4) throw InvalidPath("closed path needs at least 4 edges");
  if (!path.inside(field.nx(), field.ny())) throw InvalidPath("path leaves the field");
}

template <typename Scalar>
Scalar edge_difference(const BasicOrientationField<Scalar>& field, const LatticePath& path,
                       std::size_t e) {
  const GridPoint& a = path.edge_start(e);
  const GridPoint& b = path.edge_end(e);
  return field(b.x(), b.y()) - field(a.x(), a.y());
}

}  // namespace detail

/// Winding of the orientation along a closed path: the sum of wrapped edge
/// differences, quantized to half units (nematic) or whole units (polar).
template <typename Scalar>
BasicChargeEstimate<Scalar> estimate_charge(const BasicOrientationField<Scalar>& field,
                                            const LatticePath& path) {
  detail::require_evaluable(field, path);
  const PeriodMode mode = field.mode();

  Scalar raw = 0;
  for (std::size_t e = 0; e < path.num_edges(); ++e)
    raw += wrap_diff(detail::edge_difference(field, path, e), mode);

  // raw / pi counts half units; polar sums are multiples of 2 pi.
  const Scalar pi = std::numbers::pi_v<Scalar>;
  long halves = mode == PeriodMode::Nematic ? std::lround(raw / pi)
                                            : 2 * std::lround(raw / (2 * pi));
  const Scalar residual = raw - Scalar(halves) * pi;
  if (!(std::abs(residual) < Scalar(kQuantizationTolerance)))
    throw QuantizationFailure("winding sum " + std::to_string(double(raw)) +
                              " is not a multiple of the period");

  const Eigen::Vector2d c = path.centroid();
  return {Charge::from_halves(static_cast<int>(halves)),
          c.template cast<Scalar>() * field.h(), raw, residual};
}

/// Per-edge distance to the nearest wrap discontinuity and the path minimum.
template <typename Scalar>
BasicRobustnessReport<Scalar> path_robustness(const BasicOrientationField<Scalar>& field,
                                              const LatticePath& path) {
  detail::require_evaluable(field, path);
  const std::size_t n = path.num_edges();

  BasicRobustnessReport<Scalar> report;
  report.per_edge.resize(static_cast<Eigen::Index>(n));
  for (std::size_t e = 0; e < n; ++e) {
    const GridPoint& a = path.edge_start(e);
    const GridPoint& b = path.edge_end(e);
    report.per_edge(static_cast<Eigen::Index>(e)) =
        edge_robustness(field(a.x(), a.y()), field(b.x(), b.y()), field.mode());
  }
  Eigen::Index weakest = 0;
  report.path_robustness = report.per_edge.minCoeff(&weakest);
  report.weakest_edge = static_cast<std::size_t>(weakest);
  return report;
}

}  // namespace defect_robust
