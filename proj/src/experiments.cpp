#include "defect_robust/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "defect_robust/estimator.hpp"
#include "defect_robust/random.hpp"
#include "defect_robust/synthesis.hpp"

namespace defect_robust {
namespace {

constexpr double kVertexExclusion = 1e-9;
constexpr int kMaxCenterRetries = 100;
constexpr std::uint64_t kCenterStream = 1;
constexpr std::uint64_t kNoiseStream = 2;

bool near_vertex(const LatticePath& path, const Eigen::Vector2d& p) {
  return std::any_of(path.vertices().begin(), path.vertices().end(), [&](const GridPoint& v) {
    return (v.cast<double>() - p).norm() < kVertexExclusion;
  });
}

// Runs fn(begin, end) over contiguous chunks of [0, n).
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        fn(std::min(n, w * chunk), std::min(n, (w + 1) * chunk));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct PathEvaluation {
  Charge charge;
  double robustness;
};

PathEvaluation evaluate(const OrientationField& field, const LatticePath& path) {
  return {estimate_charge(field, path).charge, path_robustness(field, path).path_robustness};
}

// Equivalent to evaluating add_noise(clean, noise) on `path`: only the path
// vertices are perturbed, using the same per-index offsets.
PathEvaluation evaluate_noisy(OrientationField& scratch, const OrientationField& clean,
                              const LatticePath& path, const NoiseSpec& noise) {
  for (const auto& v : path.vertices())
    scratch.set(v.x(), v.y(), clean(v.x(), v.y()) + noise_offset(noise, clean.index(v.x(), v.y())));
  return evaluate(scratch, path);
}

}  // namespace

SweepConfig default_sweep_config() {
  SweepConfig config;
  for (const auto& name : builtin_template_names()) config.templates.push_back(builtin_template(name));
  return config;
}

void validate(const SweepConfig& config) {
  if (config.templates.empty()) throw std::invalid_argument("sweep needs at least one template");
  if (config.n_centers < 1) throw std::invalid_argument("n_centers must be >= 1");
  if (config.n_noise_realizations < 1)
    throw std::invalid_argument("n_noise_realizations must be >= 1");
  if (config.oracle_density < 2) throw std::invalid_argument("oracle_density must be >= 2");
  if (config.nx < 2 || config.ny < 2 || !(config.h > 0))
    throw std::invalid_argument("invalid sweep grid");
  if (config.mode == PeriodMode::Polar && !config.charge.is_integer())
    throw std::invalid_argument("polar sweeps need an integer charge");
  for (double s : config.noise_amplitudes)
    if (!(s >= 0) || s >= period(config.mode) / 2)
      throw std::invalid_argument("noise amplitudes must lie in [0, P/2)");
  const Eigen::Vector2d mid((config.nx - 1) / 2.0, (config.ny - 1) / 2.0);
  for (const auto& t : config.templates) {
    const LatticePath placed = place_near(t, mid).boundary();
    // one-cell margin on every side
    if (!placed.translated(GridPoint(-1, -1)).inside(config.nx - 2, config.ny - 2))
      throw std::invalid_argument("grid too small for template '" + t.name + "'");
  }
}

Summary summarize(std::vector<double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  s.min = values.front();
  s.max = values.back();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.count);
  double ss = 0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(s.count));
  return s;
}

std::vector<Eigen::Vector2d> oracle_centers(const Template& tmpl, int density) {
  if (density < 2) throw std::invalid_argument("oracle density must be >= 2");
  const Eigen::Vector2d origin = tmpl.centroid() - Eigen::Vector2d::Constant(0.5);
  std::vector<Eigen::Vector2d> centers;
  centers.reserve(static_cast<std::size_t>(density + 1) * static_cast<std::size_t>(density + 1));
  for (int k = 0; k <= density; ++k) {
    for (int l = 0; l <= density; ++l) {
      const Eigen::Vector2d c =
          origin + Eigen::Vector2d(static_cast<double>(k) / density, static_cast<double>(l) / density);
      if (!near_vertex(tmpl.boundary, c)) centers.push_back(c);
    }
  }
  return centers;
}

double analytic_robustness(const Template& tmpl, Charge q, PeriodMode mode,
                           const Eigen::Vector2d& center) {
  const LatticePath& path = tmpl.boundary;
  const std::size_t n = path.num_vertices();
  std::vector<double> bearing(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Eigen::Vector2d d = path.vertices()[v].cast<double>() - center;
    bearing[v] = std::atan2(d.y(), d.x());
  }
  const double half = period(mode) / 2;
  double best = half;
  for (std::size_t e = 0; e < n; ++e) {
    const double swept = wrap_diff(bearing[(e + 1) % n] - bearing[e], PeriodMode::Polar);
    best = std::min(best, half - std::abs(wrap_diff(q.value() * swept, mode)));
  }
  return std::max(best, 0.0);
}

IntervalEstimate theoretical_interval(const Template& tmpl, Charge q, PeriodMode mode,
                                      int oracle_density) {
  const auto centers = oracle_centers(tmpl, oracle_density);
  IntervalEstimate out;
  out.lower = std::numeric_limits<double>::infinity();
  out.upper = -std::numeric_limits<double>::infinity();
  for (const auto& c : centers) {
    const double r = analytic_robustness(tmpl, q, mode, c);
    out.lower = std::min(out.lower, r);
    out.upper = std::max(out.upper, r);
  }
  out.n_oracle_samples = centers.size();
  return out;
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DEFECT_ROBUST_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t sweep_noise_seed(const SweepConfig& config, std::size_t center_index,
                               std::size_t realization) {
  const auto n_real = static_cast<std::uint64_t>(config.n_noise_realizations);
  return counter_hash(derive_key(config.base_seed, kNoiseStream), center_index * n_real + realization);
}

SweepResult run_sweep(const SweepConfig& config) {
  validate(config);
  const int threads = resolve_thread_count(config.threads);
  const auto n_centers = static_cast<std::size_t>(config.n_centers);
  const auto n_real = static_cast<std::size_t>(config.n_noise_realizations);
  const std::uint64_t center_key = derive_key(config.base_seed, kCenterStream);
  const Eigen::Vector2d mid((config.nx - 1) / 2.0, (config.ny - 1) / 2.0);

  SweepResult result;
  result.config = config;
  for (const auto& tmpl : config.templates) {
    const Placement placement = place_near(tmpl, mid);
    const LatticePath path = placement.boundary();
    const Eigen::Vector2d origin = placement.centroid() - Eigen::Vector2d::Constant(0.5);

    TemplateResult tr;
    tr.tmpl = tmpl;
    tr.offset = placement.offset;
    tr.oracle = theoretical_interval(tmpl, config.charge, config.mode, config.oracle_density);
    for (double s : config.noise_amplitudes) {
      AmplitudeResult ar;
      ar.amplitude = s;
      ar.samples.resize(s == 0 ? n_centers : n_centers * n_real);
      tr.by_amplitude.push_back(std::move(ar));
    }

    parallel_for(n_centers, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        std::optional<OrientationField> clean;
        Eigen::Vector2d center;
        for (int attempt = 0; attempt < kMaxCenterRetries && !clean; ++attempt) {
          const std::uint64_t counter = 2 * (k * kMaxCenterRetries + attempt);
          center = origin + Eigen::Vector2d(counter_uniform(center_key, counter),
                                            counter_uniform(center_key, counter + 1));
          if (near_vertex(path, center)) continue;
          try {
            clean = synth_defect_field({config.charge, center * config.h, 0.0}, config.nx,
                                       config.ny, config.h, config.mode);
          } catch (const DegenerateCenter&) {
          }
        }
        if (!clean)
          throw SweepFailure("no admissible center after " + std::to_string(kMaxCenterRetries) +
                             " draws");

        const PathEvaluation base = evaluate(*clean, path);
        OrientationField scratch = *clean;
        for (auto& ar : tr.by_amplitude) {
          const std::size_t reps = ar.amplitude == 0 ? 1 : n_real;
          for (std::size_t r = 0; r < reps; ++r) {
            PathEvaluation ev = base;
            if (ar.amplitude != 0)
              ev = evaluate_noisy(scratch, *clean, path,
                                  {ar.amplitude, sweep_noise_seed(config, k, r)});
            Sample& smp = ar.samples[r * n_centers + k];
            smp.index = r * n_centers + k;
            smp.center_index = static_cast<int>(k);
            smp.realization = static_cast<int>(r);
            smp.center = center * config.h;
            smp.charge = ev.charge;
            smp.robustness = ev.robustness;
            smp.normalized = ev.robustness / tmpl.resolution;
            smp.clean_robustness = base.robustness;
          }
        }
      }
    });

    for (auto& ar : tr.by_amplitude) {
      std::vector<double> r, nr;
      std::size_t agree = 0;
      for (const auto& smp : ar.samples) {
        r.push_back(smp.robustness);
        nr.push_back(smp.normalized);
        agree += smp.charge == config.charge;
      }
      ar.robustness = summarize(std::move(r));
      ar.normalized = summarize(std::move(nr));
      ar.charge_agreement = static_cast<double>(agree) / static_cast<double>(ar.samples.size());
    }
    result.templates.push_back(std::move(tr));
  }
  return result;
}

std::vector<Ranking> normalize_and_rank(const SweepResult& result) {
  std::vector<Ranking> rankings;
  for (std::size_t a = 0; a < result.config.noise_amplitudes.size(); ++a) {
    Ranking ranking;
    ranking.amplitude = result.config.noise_amplitudes[a];
    for (const auto& tr : result.templates) {
      const AmplitudeResult& ar = tr.by_amplitude[a];
      ranking.entries.push_back({tr.tmpl.name, tr.tmpl.resolution, ar.robustness,
                                 ar.robustness.min / tr.tmpl.resolution,
                                 ar.robustness.mean / tr.tmpl.resolution});
    }
    std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                     [](const RankEntry& x, const RankEntry& y) {
                       return x.min_normalized > y.min_normalized;
                     });
    rankings.push_back(std::move(ranking));
  }
  return rankings;
}

double view_angle_bound(double h, double r) {
  if (r >= h / 2) return std::asin(std::min(1.0, h / r));
  return 2 * std::atan(h / (2 * r));
}

ConvergenceTable convergence_study(Charge q, const std::vector<int>& sizes, PeriodMode mode,
                                   int oracle_density, double h) {
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] < 1 || (i > 0 && sizes[i] <= sizes[i - 1]))
      throw std::invalid_argument("sizes must be ascending and >= 1");

  ConvergenceTable table;
  table.monotone = true;
  const double half = period(mode) / 2;
  for (int n : sizes) {
    const Template tmpl = builtin_template("square(" + std::to_string(n) + ")");
    ConvergenceRow row;
    row.n = n;
    row.oracle = theoretical_interval(tmpl, q, mode, oracle_density);
    row.r_min = std::numeric_limits<double>::infinity();
    for (const auto& c : oracle_centers(tmpl, oracle_density))
      row.r_min = std::min(row.r_min, distance_to_boundary(tmpl.boundary, c) * h);
    row.analytic_lower_bound = half - std::abs(q.value()) * view_angle_bound(h, row.r_min);
    row.bound_holds = row.oracle.lower >= row.analytic_lower_bound - 1e-9;
    if (!table.rows.empty() && !(row.oracle.lower > table.rows.back().oracle.lower))
      table.monotone = false;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace defect_robust
