#include "curvemetrics/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace curvemetrics::io {

using nlohmann::json;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

json parse_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::pair<Eigen::ArrayXd, Eigen::ArrayXd> points_from_json(const json& j,
                                                           const std::string& where) {
  if (!j.contains("n") || !j.contains("points"))
    throw ParseError(where + ": expected keys \"n\" and \"points\"");
  if (!j["n"].is_number_integer()) throw ParseError(where + ": \"n\" must be an integer");
  const auto n = j["n"].get<Eigen::Index>();
  const auto& pts = j["points"];
  if (!pts.is_array() || static_cast<Eigen::Index>(pts.size()) != n)
    throw ParseError(where + ": \"points\" must be an array of n pairs");
  Eigen::ArrayXd x(n), y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = pts[static_cast<size_t>(i)];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw ParseError(where + ": point " + std::to_string(i) + " is not an [x, y] pair");
    x[i] = p[0].get<double>();
    y[i] = p[1].get<double>();
  }
  return {std::move(x), std::move(y)};
}

json points_to_json(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  json pts = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) pts.push_back({x[i], y[i]});
  return pts;
}

std::vector<std::vector<double>> read_csv_rows(const std::string& path, size_t cols) {
  std::istringstream in(read_text(path));
  std::vector<std::vector<double>> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::stringstream fields(line);
    std::string field;
    bool numeric = true;
    while (std::getline(fields, field, ',')) {
      try {
        size_t used = 0;
        row.push_back(std::stod(field, &used));
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (lineno == 1) continue;  // header
      throw ParseError(path + ": non-numeric data at line " + std::to_string(lineno));
    }
    if (row.size() != cols)
      throw ParseError(path + ": expected " + std::to_string(cols) + " columns at line " +
                       std::to_string(lineno));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(path + ": no data rows");
  return rows;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

DiscreteCurve read_curve(const std::string& path) {
  const json j = parse_json(path);
  auto [x, y] = points_from_json(j, path);
  return make_curve(x, y);
}

void write_curve(const std::string& path, const DiscreteCurve& c) {
  json j;
  j["n"] = c.n();
  j["points"] = points_to_json(c.x(), c.y());
  write_text(path, j.dump());
}

ScalarField read_scalar_field(const std::string& path) {
  const auto rows = read_csv_rows(path, 2);
  Eigen::ArrayXd v(static_cast<Eigen::Index>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) v[static_cast<Eigen::Index>(i)] = rows[i][1];
  return ScalarField(std::move(v));
}

TangentField read_tangent_field(const std::string& path) {
  const auto rows = read_csv_rows(path, 3);
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::ArrayXd x(n), y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x[i] = rows[static_cast<size_t>(i)][1];
    y[i] = rows[static_cast<size_t>(i)][2];
  }
  return TangentField(std::move(x), std::move(y));
}

void write_scalar_field(const std::string& path, const ScalarField& f) {
  const Eigen::ArrayXd th = theta_grid(f.n());
  std::string out = "theta,value\n";
  for (Eigen::Index i = 0; i < f.n(); ++i)
    out += format_double(th[i]) + "," + format_double(f.values[i]) + "\n";
  write_text(path, out);
}

void write_tangent_field(const std::string& path, const TangentField& f) {
  const Eigen::ArrayXd th = theta_grid(f.n());
  std::string out = "theta,vx,vy\n";
  for (Eigen::Index i = 0; i < f.n(); ++i)
    out += format_double(th[i]) + "," + format_double(f.x[i]) + "," + format_double(f.y[i]) + "\n";
  write_text(path, out);
}

CurvePath read_path(const std::string& path) {
  const json j = parse_json(path);
  if (!j.contains("m") || !j.contains("n") || !j.contains("frames"))
    throw ParseError(path + ": expected keys \"m\", \"n\", \"frames\"");
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
    throw ParseError(path + ": \"m\" and \"n\" must be integers");
  const auto m = j["m"].get<Eigen::Index>();
  const auto n = j["n"].get<Eigen::Index>();
  const auto& frames = j["frames"];
  if (!frames.is_array() || static_cast<Eigen::Index>(frames.size()) != m)
    throw ParseError(path + ": \"frames\" must be an array of m frames");
  std::vector<DiscreteCurve> curves;
  curves.reserve(static_cast<size_t>(m));
  for (const auto& f : frames) {
    if (!f.is_array() || static_cast<Eigen::Index>(f.size()) != n)
      throw ParseError(path + ": each frame must list n points");
    Eigen::ArrayXd x(n), y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& p = f[static_cast<size_t>(i)];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw ParseError(path + ": frame point is not an [x, y] pair");
      x[i] = p[0].get<double>();
      y[i] = p[1].get<double>();
    }
    curves.push_back(make_curve(x, y));
  }
  return make_path(std::move(curves));
}

void write_path(const std::string& path, const CurvePath& p) {
  json j;
  j["m"] = p.m();
  j["n"] = p.curves.front().n();
  json frames = json::array();
  for (const auto& c : p.curves) frames.push_back(points_to_json(c.x(), c.y()));
  j["frames"] = std::move(frames);
  write_text(path, j.dump());
}

void write_diagnostics(const std::string& path, const GeodesicResult& r) {
  std::string out = "iteration,energy,max_horizontality_residual,step_size\n";
  for (size_t i = 0; i < r.energies.size(); ++i) {
    const double step = i == 0 ? 0.0 : r.step_sizes[i - 1];
    out += std::to_string(i) + "," + format_double(r.energies[i]) + "," +
           format_double(r.max_residuals[i]) + "," + format_double(step) + "\n";
  }
  write_text(path, out);
}

void write_operator(const std::string& path, const LinOp& A) {
  std::ostringstream out;
  out << A.n() << "\n";
  const Eigen::MatrixXd& m = A.entries();
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf << (j + 1 == m.cols() ? "\n" : " ");
    }
  }
  write_text(path, out.str());
}

Eigen::MatrixXd read_operator_entries(const std::string& path) {
  std::istringstream in(read_text(path));
  Eigen::Index n = 0;
  if (!(in >> n) || n <= 0) throw ParseError(path + ": bad operator header");
  Eigen::MatrixXd m(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < 2 * n; ++i)
    for (Eigen::Index j = 0; j < 2 * n; ++j)
      if (!(in >> m(i, j))) throw ParseError(path + ": truncated operator body");
  return m;
}

std::string splitting_report_json(const SplittingReport& r) {
  json j;
  j["idempotence_first"] = r.idempotence_first;
  j["idempotence_second"] = r.idempotence_second;
  j["complementarity"] = r.complementarity;
  j["annihilation"] = r.annihilation;
  j["pass"] = r.pass;
  return j.dump();
}

std::string metric_report_json(const MetricReport& r) {
  json j;
  j["orthogonality_defect"] = r.orthogonality_defect;
  j["decomposition_residual"] = r.decomposition_residual;
  j["symmetry_defect"] = r.symmetry_defect;
  j["min_rayleigh"] = r.min_rayleigh;
  j["pass"] = r.pass;
  return j.dump();
}

Config read_config(const std::string& path) try {
  const json j = parse_json(path);
  Config cfg;
  if (j.contains("n")) {
    cfg.n = j["n"].get<int>();
    if (*cfg.n < 8 || *cfg.n % 2 != 0)
      throw ParseError(path + ": config n must be even and at least 8");
  }
  if (j.contains("scheme")) {
    cfg.scheme = j["scheme"].get<std::string>();
    if (*cfg.scheme != "central")
      throw ParseError(path + ": derivative scheme '" + *cfg.scheme + "' is not implemented");
  }
  if (j.contains("tolerances")) {
    for (const auto& [key, val] : j["tolerances"].items()) {
      const double v = val.get<double>();
      if (!(v > 0.0)) throw ParseError(path + ": tolerance '" + key + "' must be positive");
      cfg.tolerances[key] = v;
    }
  }
  if (j.contains("recipe")) cfg.recipe = j["recipe"].get<std::string>();
  if (j.contains("splitting")) cfg.splitting = j["splitting"].get<std::string>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned>();
  return cfg;
} catch (const json::exception& e) {
  throw ParseError(path + ": " + e.what());
}

}  // namespace curvemetrics::io
