#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "defect_robust/experiments.hpp"
#include "defect_robust/orientation_field.hpp"

namespace defect_robust {

/// ORIFIELD v1 text format:
///   ORIFIELD 1 <nx> <ny> <h> <nematic|polar>
///   ny rows of nx space-separated radians, row 0 = lowest y.
/// Angles are written with 17 significant digits and round-trip exactly.
void write_field(const OrientationField& field, std::ostream& out);
void write_field(const OrientationField& field, const std::filesystem::path& path);

/// Throws ParseError (with line number) or InvalidAngle.
OrientationField read_field(std::istream& in);
OrientationField read_field(const std::filesystem::path& path);

/// "%.17g".
std::string format_exact(double value);
/// Shortest text that parses back to the same double.
std::string format_shortest(double value);

inline constexpr const char* kReportHeader =
    "template,amplitude,sample_index,center_x,center_y,charge,robustness,normalized_robustness";

/// One row per sample, ordered by template, amplitude, sample_index.
void write_report_csv(const SweepResult& result, std::ostream& out);

/// Key-value summary, one "key = value" per line.
void write_summary(const SweepResult& result, const std::vector<Ranking>& rankings,
                   std::ostream& out);

/// Reads a JSON sweep configuration. Missing keys keep the defaults of
/// default_sweep_config().
SweepConfig read_sweep_config(std::istream& in);
SweepConfig read_sweep_config(const std::filesystem::path& path);

}  // namespace defect_robust
