#pragma once

#include <map>
#include <optional>
#include <string>

#include "curvemetrics/metric.hpp"
#include "curvemetrics/path.hpp"
#include "curvemetrics/splitting.hpp"

namespace curvemetrics::io {

// Curve files: {"n": int, "points": [[x, y], ...]} sampled at uniform theta.
DiscreteCurve read_curve(const std::string& path);
void write_curve(const std::string& path, const DiscreteCurve& c);

// Field files: CSV with a "theta,value" or "theta,vx,vy" header (header
// optional on input), one row per grid point.
ScalarField read_scalar_field(const std::string& path);
TangentField read_tangent_field(const std::string& path);
void write_scalar_field(const std::string& path, const ScalarField& f);
void write_tangent_field(const std::string& path, const TangentField& f);

// Path files: {"m": int, "n": int, "frames": [[[x, y], ...], ...]}.
CurvePath read_path(const std::string& path);
void write_path(const std::string& path, const CurvePath& p);

// Diagnostics CSV: iteration,energy,max_horizontality_residual,step_size.
void write_diagnostics(const std::string& path, const GeodesicResult& r);

// Debug operator format: first line n, then 2N rows of 2N entries.
void write_operator(const std::string& path, const LinOp& A);
Eigen::MatrixXd read_operator_entries(const std::string& path);

std::string splitting_report_json(const SplittingReport& r);
std::string metric_report_json(const MetricReport& r);

// Optional defaults loaded from the file named by CURVEMETRICS_CONFIG.
struct Config {
  std::optional<int> n;
  std::optional<std::string> scheme;  // accepted, only "central" implemented
  std::map<std::string, double> tolerances;
  std::optional<std::string> recipe;
  std::optional<std::string> splitting;
  std::optional<unsigned> seed;
};

Config read_config(const std::string& path);

// Doubles rendered with 12 significant digits.
std::string format_double(double v);

}  // namespace curvemetrics::io
