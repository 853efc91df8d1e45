#include "defect_robust/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "defect_robust/errors.hpp"

namespace defect_robust {
namespace {

constexpr const char* kMagic = "ORIFIELD";
constexpr int kVersion = 1;

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(t);
  return tokens;
}

bool parse_double(const std::string& token, double& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

bool parse_int(const std::string& token, int& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

std::string format_exact(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_shortest(double value) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_field(const OrientationField& field, std::ostream& out) {
  out << kMagic << ' ' << kVersion << ' ' << field.nx() << ' ' << field.ny() << ' '
      << format_exact(field.h()) << ' ' << to_string(field.mode()) << '\n';
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      if (i) out << ' ';
      out << format_exact(field(i, j));
    }
    out << '\n';
  }
}

void write_field(const OrientationField& field, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_field(field, out);
}

OrientationField read_field(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  const auto header = split_ws(line);
  if (header.size() != 6 || header[0] != kMagic)
    throw ParseError("expected 'ORIFIELD 1 <nx> <ny> <h> <mode>'", 1);
  int version = 0, nx = 0, ny = 0;
  double h = 0;
  if (!parse_int(header[1], version) || version != kVersion)
    throw ParseError("unsupported version '" + header[1] + "'", 1);
  if (!parse_int(header[2], nx) || !parse_int(header[3], ny) || nx < 2 || ny < 2)
    throw ParseError("dimensions must be integers >= 2", 1);
  if (!parse_double(header[4], h) || !(h > 0) || !std::isfinite(h))
    throw ParseError("grid spacing must be a positive number", 1);
  PeriodMode mode;
  try {
    mode = parse_period_mode(header[5]);
  } catch (const std::invalid_argument&) {
    throw ParseError("mode must be 'nematic' or 'polar'", 1);
  }

  OrientationField field(nx, ny, h, mode);
  for (int j = 0; j < ny; ++j) {
    const int lineno = j + 2;
    if (!std::getline(in, line))
      throw ParseError("missing row " + std::to_string(j) + " (expected " + std::to_string(ny) +
                           " rows)",
                       lineno);
    const auto tokens = split_ws(line);
    if (static_cast<int>(tokens.size()) != nx)
      throw ParseError("row " + std::to_string(j) + " has " + std::to_string(tokens.size()) +
                           " values, expected " + std::to_string(nx),
                       lineno);
    for (int i = 0; i < nx; ++i) {
      double angle = 0;
      if (!parse_double(tokens[static_cast<std::size_t>(i)], angle))
        throw ParseError("row " + std::to_string(j) + ": bad number '" +
                             tokens[static_cast<std::size_t>(i)] + "'",
                         lineno);
      if (!std::isfinite(angle))
        throw InvalidAngle("non-finite angle at row " + std::to_string(j) + ", column " +
                           std::to_string(i));
      field.set(i, j, angle);
    }
  }
  for (int lineno = ny + 2; std::getline(in, line); ++lineno)
    if (!blank(line)) throw ParseError("more than " + std::to_string(ny) + " rows", lineno);
  return field;
}

OrientationField read_field(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_field(in);
}

void write_report_csv(const SweepResult& result, std::ostream& out) {
  out << kReportHeader << '\n';
  for (const auto& tr : result.templates) {
    for (const auto& ar : tr.by_amplitude) {
      const std::string amp = format_shortest(ar.amplitude);
      for (const auto& s : ar.samples) {
        out << tr.tmpl.name << ',' << amp << ',' << s.index << ',' << format_shortest(s.center.x())
            << ',' << format_shortest(s.center.y()) << ',' << format_shortest(s.charge.value())
            << ',' << format_shortest(s.robustness) << ',' << format_shortest(s.normalized)
            << '\n';
      }
    }
  }
}

void write_summary(const SweepResult& result, const std::vector<Ranking>& rankings,
                   std::ostream& out) {
  const SweepConfig& c = result.config;
  auto kv = [&out](const std::string& key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  kv("sweep.charge", c.charge.to_string());
  kv("sweep.mode", std::string(to_string(c.mode)));
  kv("sweep.n_centers", std::to_string(c.n_centers));
  kv("sweep.n_noise_realizations", std::to_string(c.n_noise_realizations));
  kv("sweep.seed", std::to_string(c.base_seed));
  kv("sweep.grid", std::to_string(c.nx) + "x" + std::to_string(c.ny));
  kv("sweep.h", format_shortest(c.h));
  kv("sweep.oracle_density", std::to_string(c.oracle_density));

  auto stats = [&kv](const std::string& prefix, const Summary& s) {
    kv(prefix + ".count", std::to_string(s.count));
    kv(prefix + ".min", format_shortest(s.min));
    kv(prefix + ".max", format_shortest(s.max));
    kv(prefix + ".mean", format_shortest(s.mean));
    kv(prefix + ".stddev", format_shortest(s.stddev));
  };
  for (const auto& tr : result.templates) {
    const std::string t = "template[" + tr.tmpl.name + "]";
    kv(t + ".cells", std::to_string(tr.tmpl.cells.size()));
    kv(t + ".edges", std::to_string(tr.tmpl.boundary.num_edges()));
    kv(t + ".resolution", format_shortest(tr.tmpl.resolution));
    kv(t + ".offset", std::to_string(tr.offset.x()) + "," + std::to_string(tr.offset.y()));
    kv(t + ".oracle.lower", format_shortest(tr.oracle.lower));
    kv(t + ".oracle.upper", format_shortest(tr.oracle.upper));
    kv(t + ".oracle.samples", std::to_string(tr.oracle.n_oracle_samples));
    for (const auto& ar : tr.by_amplitude) {
      const std::string a = t + ".amplitude[" + format_shortest(ar.amplitude) + "]";
      stats(a + ".robustness", ar.robustness);
      stats(a + ".normalized", ar.normalized);
      kv(a + ".charge_agreement", format_shortest(ar.charge_agreement));
    }
  }
  for (const auto& ranking : rankings) {
    const std::string r = "ranking[" + format_shortest(ranking.amplitude) + "]";
    for (std::size_t k = 0; k < ranking.entries.size(); ++k)
      kv(r + "." + std::to_string(k + 1),
         ranking.entries[k].name + " " + format_shortest(ranking.entries[k].min_normalized));
  }
}

SweepConfig read_sweep_config(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
  SweepConfig c = default_sweep_config();
  try {
    if (j.contains("templates")) {
      c.templates.clear();
      for (const auto& name : j.at("templates"))
        c.templates.push_back(builtin_template(name.get<std::string>()));
    }
    if (j.contains("n_centers")) c.n_centers = j.at("n_centers").get<int>();
    if (j.contains("amplitudes")) c.noise_amplitudes = j.at("amplitudes").get<std::vector<double>>();
    if (j.contains("realizations")) c.n_noise_realizations = j.at("realizations").get<int>();
    if (j.contains("seed")) c.base_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("nx")) c.nx = j.at("nx").get<int>();
    if (j.contains("ny")) c.ny = j.at("ny").get<int>();
    if (j.contains("h")) c.h = j.at("h").get<double>();
    if (j.contains("mode")) c.mode = parse_period_mode(j.at("mode").get<std::string>());
    if (j.contains("charge")) {
      const auto& q = j.at("charge");
      c.charge = q.is_string() ? Charge::parse(q.get<std::string>())
                               : Charge::parse(format_shortest(q.get<double>()));
    }
    if (j.contains("oracle_density")) c.oracle_density = j.at("oracle_density").get<int>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  return c;
}

SweepConfig read_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_sweep_config(in);
}

}  // namespace defect_robust
