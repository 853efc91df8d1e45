#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "defect_robust/angles.hpp"
#include "defect_robust/charge.hpp"
#include "defect_robust/templates.hpp"

namespace defect_robust {

struct SweepConfig {
  std::vector<Template> templates;
  int n_centers = 10000;
  std::vector<double> noise_amplitudes{0.0, 0.2};
  int n_noise_realizations = 10;
  std::uint64_t base_seed = 0;
  int nx = 32;
  int ny = 32;
  double h = 1.0;
  PeriodMode mode = PeriodMode::Nematic;
  Charge charge = Charge::from_halves(1);
  int oracle_density = 200;
  /// Worker count; 0 reads DEFECT_ROBUST_THREADS, then the hardware.
  int threads = 0;
};

/// Builtin templates, 10^4 centers, amplitudes {0, 0.2}, 10 realizations.
SweepConfig default_sweep_config();

/// Throws std::invalid_argument when the config cannot be swept.
void validate(const SweepConfig& config);

struct IntervalEstimate {
  double lower = 0;
  double upper = 0;
  std::size_t n_oracle_samples = 0;
};

struct Summary {
  std::size_t count = 0;
  double min = 0;
  double max = 0;
  double mean = 0;
  double stddev = 0;  // population
};

/// Order-insensitive: values are sorted before accumulation.
Summary summarize(std::vector<double> values);

struct Sample {
  std::size_t index = 0;  // realization * n_centers + center_index
  int center_index = 0;
  int realization = 0;
  Eigen::Vector2d center = Eigen::Vector2d::Zero();  // field units
  Charge charge;
  double robustness = 0;
  double normalized = 0;
  double clean_robustness = 0;  // same center, no noise
};

struct AmplitudeResult {
  double amplitude = 0;
  std::vector<Sample> samples;
  Summary robustness;
  Summary normalized;
  double charge_agreement = 0;
};

struct TemplateResult {
  Template tmpl;
  GridPoint offset = GridPoint::Zero();
  IntervalEstimate oracle;
  std::vector<AmplitudeResult> by_amplitude;
};

struct SweepResult {
  SweepConfig config;
  std::vector<TemplateResult> templates;
};

/// Grid of candidate defect centers over the unit square around the
/// template centroid: (density + 1)^2 nested lattice points, minus those
/// within 1e-9 of a path vertex. Template units.
std::vector<Eigen::Vector2d> oracle_centers(const Template& tmpl, int density);

/// Noise-free path robustness of the pure winding field, evaluated per edge
/// from the subtended view angles (no field is synthesized).
double analytic_robustness(const Template& tmpl, Charge q, PeriodMode mode,
                           const Eigen::Vector2d& center);

/// [min, max] of analytic_robustness over oracle_centers.
IntervalEstimate theoretical_interval(const Template& tmpl, Charge q, PeriodMode mode,
                                      int oracle_density = 200);

SweepResult run_sweep(const SweepConfig& config);

/// Noise draw used by run_sweep for (center_index, realization). The same
/// seed is reused across amplitudes so noisy and clean samples pair up.
std::uint64_t sweep_noise_seed(const SweepConfig& config, std::size_t center_index,
                               std::size_t realization);

struct RankEntry {
  std::string name;
  double resolution = 0;
  Summary robustness;
  double min_normalized = 0;
  double mean_normalized = 0;
};

struct Ranking {
  double amplitude = 0;
  std::vector<RankEntry> entries;  // best first
};

/// Ranks templates per amplitude by their smallest normalized robustness,
/// descending.
std::vector<Ranking> normalize_and_rank(const SweepResult& result);

/// Upper bound on the angle subtended by a lattice edge of length h from a
/// point at distance >= r: arcsin(min(1, h/r)) while r >= h/2, and the
/// exact 2 atan(h / 2r) closer in, where the arcsin cap no longer holds.
double view_angle_bound(double h, double r);

struct ConvergenceRow {
  int n = 0;
  double r_min = 0;  // smallest center-to-edge distance among oracle centers
  IntervalEstimate oracle;
  double analytic_lower_bound = 0;
  bool bound_holds = false;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  bool monotone = false;  // oracle.lower strictly increasing
};

ConvergenceTable convergence_study(Charge q, const std::vector<int>& sizes, PeriodMode mode,
                                   int oracle_density = 200, double h = 1.0);

/// Resolves SweepConfig::threads.
int resolve_thread_count(int requested);

}  // namespace defect_robust
