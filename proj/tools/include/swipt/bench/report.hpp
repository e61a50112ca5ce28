#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "swipt/bench/runner.hpp"

namespace swipt::bench {

/// printf-style "%.10g".
std::string format_number(double v);

void write_re_region_csv(std::ostream& os, const std::vector<PointResult>& rows);
void write_er_activation_csv(std::ostream& os, const std::vector<PointResult>& rows, Problem problem);
void write_outer_curve_csv(std::ostream& os, const std::vector<CurveSample>& curve);
void write_oracle_csv(std::ostream& os, const std::vector<OracleRow>& rows);
/// Beam vectors as interleaved (re, im) arrays, one record per row.
void write_beams_json(std::ostream& os, const std::vector<PointResult>& rows);

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> xy;
};

/// Line plot with markers as a standalone SVG document.
std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series);

/// Writes every artifact of a run into dir and returns the written paths.
std::vector<std::filesystem::path> write_outputs(const RunOutput& run, const std::filesystem::path& dir);

}  // namespace swipt::bench
