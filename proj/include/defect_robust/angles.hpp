#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "defect_robust/errors.hpp"

namespace defect_robust {

/// Angle periodicity of the field: headless (nematic, period pi) or
/// ordinary vectors (polar, period 2 pi).
enum class PeriodMode { Nematic, Polar };

template <typename Scalar = double>
constexpr Scalar period(PeriodMode mode) {
  return mode == PeriodMode::Nematic ? std::numbers::pi_v<Scalar>
                                     : Scalar(2) * std::numbers::pi_v<Scalar>;
}

constexpr std::string_view to_string(PeriodMode mode) {
  return mode == PeriodMode::Nematic ? "nematic" : "polar";
}

/// Parses "nematic" or "polar"; throws std::invalid_argument otherwise.
inline PeriodMode parse_period_mode(std::string_view text) {
  if (text == "nematic") return PeriodMode::Nematic;
  if (text == "polar") return PeriodMode::Polar;
  throw std::invalid_argument("unknown period mode '" + std::string(text) + "'");
}

namespace detail {

template <typename Scalar>
inline void require_finite(Scalar value) {
  if (!std::isfinite(value)) throw InvalidAngle("non-finite angle");
}

}  // namespace detail

/// Storage normal form: the representative of `angle` in [0, P).
template <typename Scalar>
Scalar canonicalize(Scalar angle, PeriodMode mode) {
  detail::require_finite(angle);
  const Scalar p = period<Scalar>(mode);
  Scalar r = angle - p * std::floor(angle / p);
  // floor can round so that r == p for tiny negative inputs
  if (r >= p) r -= p;
  if (r < Scalar(0)) r = Scalar(0);
  return r;
}

/// Representative of an angle difference in [-P/2, P/2):
/// delta - P * floor(0.5 + delta / P).
template <typename Scalar>
Scalar wrap_diff(Scalar delta, PeriodMode mode) {
  detail::require_finite(delta);
  const Scalar p = period<Scalar>(mode);
  return delta - p * std::floor(Scalar(0.5) + delta / p);
}

/// Distance of the edge difference theta_j - theta_i to the nearest
/// discontinuity P/2 + kP of wrap_diff. Lies in [0, P/2].
template <typename Scalar>
Scalar edge_robustness(Scalar theta_i, Scalar theta_j, PeriodMode mode) {
  detail::require_finite(theta_i);
  detail::require_finite(theta_j);
  const Scalar half = period<Scalar>(mode) / Scalar(2);
  const Scalar r = half - std::abs(wrap_diff(theta_j - theta_i, mode));
  return r < Scalar(0) ? Scalar(0) : r;
}

}  // namespace defect_robust
