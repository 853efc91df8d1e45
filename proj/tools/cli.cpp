#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "defect_robust/errors.hpp"
#include "defect_robust/estimator.hpp"
#include "defect_robust/experiments.hpp"
#include "defect_robust/io.hpp"
#include "defect_robust/synthesis.hpp"
#include "defect_robust/templates.hpp"

namespace defect_robust::cli {
namespace {

// Usage problems detected after CLI11 parsing (bad "x,y" pairs, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
std::pair<T, T> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(what) + " must be 'a,b'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    T x, y;
    if constexpr (std::is_integral_v<T>) {
      x = static_cast<T>(std::stol(a, &used_a));
      y = static_cast<T>(std::stol(b, &used_b));
    } else {
      x = std::stod(a, &used_a);
      y = std::stod(b, &used_b);
    }
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(what);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(what) + " must be 'a,b', got '" + text + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return values;
}

Charge charge_arg(const std::string& text) {
  try {
    return Charge::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

PeriodMode mode_arg(const std::string& text) {
  try {
    return parse_period_mode(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Template template_arg(const std::string& name) {
  try {
    return builtin_template(name);
  } catch (const UnknownTemplate& e) {
    throw UsageError(e.what());
  }
}

Placement placement_arg(const std::string& name, const std::string& at) {
  const auto [i, j] = parse_pair<int>(at, "--at");
  return Placement{template_arg(name), GridPoint(i, j)};
}

std::string point(const Eigen::Vector2d& p) {
  return format_shortest(p.x()) + "," + format_shortest(p.y());
}

std::string vertex(const GridPoint& v) {
  return "(" + std::to_string(v.x()) + "," + std::to_string(v.y()) + ")";
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Winding-number defect estimation with per-edge robustness", "defect_robust"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Synthesize a pure winding defect field");
  std::string gen_charge = "1/2", gen_center, gen_size = "32,32", gen_mode = "nematic", gen_out;
  double gen_phase = 0, gen_h = 1.0, gen_noise = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--charge", gen_charge, "Defect charge, e.g. 1/2, -1, 3/2");
  gen->add_option("--center", gen_center, "Defect center x,y in field units")->required();
  gen->add_option("--phase", gen_phase, "Global phase (radians)");
  gen->add_option("--size", gen_size, "Grid size nx,ny");
  gen->add_option("--spacing", gen_h, "Grid spacing h");
  gen->add_option("--mode", gen_mode, "nematic or polar");
  gen->add_option("--noise", gen_noise, "Uniform angle noise amplitude (radians)");
  gen->add_option("--seed", gen_seed, "Noise seed");
  gen->add_option("--out", gen_out, "Output ORIFIELD file")->required();

  // charge / robustness
  std::string field_path, tmpl_name = "2x2", at = "0,0";
  auto* chg = app.add_subcommand("charge", "Estimate the charge around one placement");
  auto* rob = app.add_subcommand("robustness", "Robustness of one placement's estimate");
  for (auto* sub : {chg, rob}) {
    sub->add_option("--field", field_path, "ORIFIELD file")->required();
    sub->add_option("--template", tmpl_name, "Template name");
    sub->add_option("--at", at, "Placement offset i,j");
  }

  // scan
  auto* scan = app.add_subcommand("scan", "List every placement with nonzero charge");
  std::string scan_out;
  scan->add_option("--field", field_path, "ORIFIELD file")->required();
  scan->add_option("--template", tmpl_name, "Template name");
  scan->add_option("--out", scan_out, "CSV output (default stdout)");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Theoretical robustness interval of a template");
  std::string orc_charge = "1/2", orc_mode = "nematic";
  int orc_density = 200;
  orc->add_option("--template", tmpl_name, "Template name");
  orc->add_option("--charge", orc_charge, "Defect charge");
  orc->add_option("--density", orc_density, "Oracle grid density per axis")
      ->check(CLI::Range(2, 100000));
  orc->add_option("--mode", orc_mode, "nematic or polar");

  // sweep
  auto* swp = app.add_subcommand("sweep", "Monte Carlo robustness sweep");
  std::string swp_config, swp_out = "sweep";
  std::optional<std::uint64_t> swp_seed;
  int swp_threads = 0;
  swp->add_option("--config", swp_config, "JSON sweep configuration");
  swp->add_option("--out", swp_out, "Output prefix: <prefix>.csv and <prefix>.summary.txt");
  swp->add_option("--seed", swp_seed, "Base seed (overrides the config)");
  swp->add_option("--threads", swp_threads, "Worker threads (results do not depend on it)");

  // convergence
  auto* cnv = app.add_subcommand("convergence", "Oracle bounds for growing square templates");
  std::string cnv_charge = "1/2", cnv_sizes = "1,2,3,4,8,16", cnv_mode = "nematic";
  int cnv_density = 200;
  cnv->add_option("--charge", cnv_charge, "Defect charge");
  cnv->add_option("--sizes", cnv_sizes, "Ascending square sizes");
  cnv->add_option("--mode", cnv_mode, "nematic or polar");
  cnv->add_option("--density", cnv_density, "Oracle grid density per axis")
      ->check(CLI::Range(2, 100000));

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*gen) {
      const auto [nx, ny] = parse_pair<int>(gen_size, "--size");
      const auto [cx, cy] = parse_pair<double>(gen_center, "--center");
      const PeriodMode mode = mode_arg(gen_mode);
      OrientationField field = synth_defect_field(
          {charge_arg(gen_charge), Eigen::Vector2d(cx, cy), gen_phase}, nx, ny, gen_h, mode);
      if (gen_noise > 0) field = add_noise(field, {gen_noise, gen_seed});
      write_field(field, std::filesystem::path(gen_out));
    } else if (*chg) {
      const Placement p = placement_arg(tmpl_name, at);
      const ChargeEstimate est = estimate_charge(read_field(std::filesystem::path(field_path)), p.boundary());
      out << "charge = " << est.charge.to_string() << '\n'
          << "raw_sum = " << format_shortest(est.raw_sum) << '\n'
          << "residual = " << format_shortest(est.residual) << '\n'
          << "anchor = " << point(est.anchor) << '\n';
    } else if (*rob) {
      const Placement p = placement_arg(tmpl_name, at);
      const LatticePath path = p.boundary();
      const RobustnessReport rep = path_robustness(read_field(std::filesystem::path(field_path)), path);
      out << "robustness = " << format_shortest(rep.path_robustness) << '\n'
          << "weakest_edge = " << rep.weakest_edge << ' ' << vertex(path.edge_start(rep.weakest_edge))
          << "->" << vertex(path.edge_end(rep.weakest_edge)) << '\n'
          << "normalized = " << format_shortest(rep.path_robustness / p.tmpl.resolution) << '\n';
    } else if (*scan) {
      const Template tmpl = template_arg(tmpl_name);
      const OrientationField field = read_field(std::filesystem::path(field_path));
      GridPoint lo = tmpl.boundary.vertices().front(), hi = lo;
      for (const auto& v : tmpl.boundary.vertices()) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
      }
      std::ofstream file;
      if (!scan_out.empty()) {
        file.open(scan_out);
        if (!file) throw std::runtime_error("cannot open " + scan_out);
      }
      std::ostream& dst = scan_out.empty() ? out : file;
      dst << "offset_i,offset_j,anchor_x,anchor_y,charge,robustness,normalized_robustness\n";
      for (int j = -lo.y(); j + hi.y() < field.ny(); ++j) {
        for (int i = -lo.x(); i + hi.x() < field.nx(); ++i) {
          const LatticePath path = tmpl.boundary.translated(GridPoint(i, j));
          const ChargeEstimate est = estimate_charge(field, path);
          if (est.charge.is_zero()) continue;
          const double r = path_robustness(field, path).path_robustness;
          dst << i << ',' << j << ',' << point(est.anchor) << ',' << format_shortest(est.charge.value())
              << ',' << format_shortest(r) << ',' << format_shortest(r / tmpl.resolution) << '\n';
        }
      }
    } else if (*orc) {
      const Template tmpl = template_arg(tmpl_name);
      const IntervalEstimate iv =
          theoretical_interval(tmpl, charge_arg(orc_charge), mode_arg(orc_mode), orc_density);
      out << "template = " << tmpl.name << '\n'
          << "lower = " << format_shortest(iv.lower) << '\n'
          << "upper = " << format_shortest(iv.upper) << '\n'
          << "samples = " << iv.n_oracle_samples << '\n';
    } else if (*swp) {
      SweepConfig config = swp_config.empty() ? default_sweep_config()
                                              : read_sweep_config(std::filesystem::path(swp_config));
      if (swp_seed) config.base_seed = *swp_seed;
      if (swp_threads > 0) config.threads = swp_threads;
      const SweepResult result = run_sweep(config);
      std::ofstream csv(swp_out + ".csv"), summary(swp_out + ".summary.txt");
      if (!csv || !summary) throw std::runtime_error("cannot write outputs for prefix " + swp_out);
      write_report_csv(result, csv);
      write_summary(result, normalize_and_rank(result), summary);
      out << "wrote " << swp_out << ".csv and " << swp_out << ".summary.txt\n";
    } else if (*cnv) {
      const Charge q = charge_arg(cnv_charge);
      const ConvergenceTable table =
          convergence_study(q, parse_int_list(cnv_sizes), mode_arg(cnv_mode), cnv_density);
      out << "n,r_min,oracle_lower,oracle_upper,analytic_lower_bound,bound_holds\n";
      for (const auto& row : table.rows)
        out << row.n << ',' << format_shortest(row.r_min) << ',' << format_shortest(row.oracle.lower)
            << ',' << format_shortest(row.oracle.upper) << ','
            << format_shortest(row.analytic_lower_bound) << ',' << (row.bound_holds ? 1 : 0) << '\n';
      out << "# monotone = " << (table.monotone ? "true" : "false") << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace defect_robust::cli
