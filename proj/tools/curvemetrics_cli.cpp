// Command line front end: projections, metric evaluation, verification
// reports and horizontal geodesics over flat files.
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvemetrics/io.hpp"
#include "curvemetrics/metric.hpp"
#include "curvemetrics/path.hpp"
#include "curvemetrics/recipe.hpp"

namespace {

using namespace curvemetrics;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitNonConvergence = 5;

struct Options {
  std::string curve_file;
  std::string curve2_file;
  std::string field_file;
  std::string field2_file;
  std::string recipe;
  std::string splitting;
  std::string out;
  std::string format = "json";
  int m = 16;
  int iters = 500;
  std::optional<unsigned> seed;
  std::optional<int> expected_n;
  bool strict = false;
  std::map<std::string, double> tolerances;
};

void apply_config_defaults(Options& opt) {
  const char* path = std::getenv("CURVEMETRICS_CONFIG");
  if (!path || !*path) return;
  const io::Config cfg = io::read_config(path);
  if (opt.recipe.empty() && cfg.recipe) opt.recipe = *cfg.recipe;
  if (opt.splitting.empty() && cfg.splitting) opt.splitting = *cfg.splitting;
  if (!opt.seed && cfg.seed) opt.seed = *cfg.seed;
  for (const auto& [name, value] : cfg.tolerances)
    opt.tolerances.emplace(name, value);  // flag values already present win
  if (cfg.n) opt.expected_n = *cfg.n;
}

DiscreteCurve load_curve(const std::string& path, const Options& opt) {
  DiscreteCurve c = io::read_curve(path);
  if (opt.expected_n && c.n() != static_cast<Eigen::Index>(*opt.expected_n))
    throw GridMismatch(path + ": curve grid disagrees with the configured n");
  return c;
}

double tol_or(const Options& opt, const std::string& name, double fallback) {
  const auto it = opt.tolerances.find(name);
  return it == opt.tolerances.end() ? fallback : it->second;
}

// Resamples to constant speed, carrying any fields through the same
// reparametrization.  Warns on stderr unless running under --strict, where a
// non constant speed curve is a hard precondition failure.
DiscreteCurve normalize_speed(DiscreteCurve c, std::vector<TangentField*> fields,
                              const Options& opt, const std::string& label) {
  if (c.speed_deviation() < 1e-3) return c;
  if (opt.strict)
    throw NotConstantSpeed(label + ": curve is not constant speed (relative deviation " +
                           io::format_double(c.speed_deviation()) + ") and --strict is set");
  std::cerr << "warning: " << label << ": resampling to constant speed (relative deviation "
            << io::format_double(c.speed_deviation()) << ")\n";
  for (int pass = 0; pass < 20 && c.speed_deviation() >= 1e-3; ++pass) {
    const Diffeo phi = constant_speed_diffeo(c);
    for (TangentField* f : fields) *f = apply_diffeo_field(*f, phi, c);
    c = apply_diffeo(c, phi);
  }
  return c;
}

std::string output_stem(const std::string& out) {
  for (const std::string suffix : {".csv", ".json"}) {
    if (out.size() > suffix.size() &&
        out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
      return out.substr(0, out.size() - suffix.size());
  }
  return out;
}

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

int cmd_project(Options& opt) {
  DiscreteCurve c = load_curve(opt.curve_file, opt);
  TangentField h = io::read_tangent_field(opt.field_file);
  if (h.n() != c.n()) throw GridMismatch("field is not on the curve grid");
  if (opt.splitting == "arc0") c = normalize_speed(std::move(c), {&h}, opt, opt.curve_file);

  auto ptr = std::make_shared<const DiscreteCurve>(std::move(c));
  const Splitting s = build_splitting(opt.splitting, ptr);
  const TangentField first = apply(s.p_first, h);
  const TangentField second = apply(s.p_second, h);

  const std::string stem = output_stem(opt.out);
  const std::string f1 = stem + "." + lower(s.label_first) + ".csv";
  const std::string f2 = stem + "." + lower(s.label_second) + ".csv";
  io::write_tangent_field(f1, first);
  io::write_tangent_field(f2, second);
  std::cout << f1 << "\n" << f2 << "\n";
  return kExitPass;
}

int cmd_metric(Options& opt) {
  DiscreteCurve c = load_curve(opt.curve_file, opt);
  const Recipe recipe = parse_recipe(opt.recipe);
  TangentField h = io::read_tangent_field(opt.field_file);
  TangentField k = opt.field2_file.empty() ? h : io::read_tangent_field(opt.field2_file);
  if (h.n() != c.n() || k.n() != c.n()) throw GridMismatch("field is not on the curve grid");
  if (recipe_needs_constant_speed(recipe))
    c = normalize_speed(std::move(c), {&h, &k}, opt, opt.curve_file);

  auto ptr = std::make_shared<const DiscreteCurve>(std::move(c));
  const Metric g = metric_from_operator(ptr, build_operator(recipe, ptr));
  std::cout << io::format_double(eval(g, h, k)) << "\n";
  return kExitPass;
}

int cmd_verify(Options& opt) {
  DiscreteCurve c = load_curve(opt.curve_file, opt);
  const Recipe recipe = parse_recipe(opt.recipe);
  if (recipe_needs_constant_speed(recipe) || opt.splitting == "arc0")
    c = normalize_speed(std::move(c), {}, opt, opt.curve_file);

  auto ptr = std::make_shared<const DiscreteCurve>(std::move(c));
  const Splitting s = build_splitting(opt.splitting, ptr);
  const Metric g{build_operator(recipe, ptr), recipe_to_string(recipe)};

  MetricReportTolerances tol;
  tol.orthogonality = tol_or(opt, "orthogonality", tol.orthogonality);
  tol.decomposition = tol_or(opt, "decomposition", tol.decomposition);
  tol.symmetry = tol_or(opt, "symmetry", tol.symmetry);
  const MetricReport rep = verify_metric(g, s, tol, opt.seed.value_or(0));

  std::string text;
  if (opt.format == "csv") {
    text = "orthogonality_defect," + io::format_double(rep.orthogonality_defect) +
           "\ndecomposition_residual," + io::format_double(rep.decomposition_residual) +
           "\nsymmetry_defect," + io::format_double(rep.symmetry_defect) + "\nmin_rayleigh," +
           io::format_double(rep.min_rayleigh) + "\npass," + (rep.pass ? "true" : "false") + "\n";
  } else {
    text = io::metric_report_json(rep) + "\n";
  }
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out);
    out << text;
    if (!out) throw ParseError(opt.out + ": cannot write report");
  }
  return rep.pass ? kExitPass : kExitVerifyFail;
}

int cmd_geodesic(Options& opt) {
  DiscreteCurve c0 = load_curve(opt.curve_file, opt);
  DiscreteCurve c1 = load_curve(opt.curve2_file, opt);
  const Recipe recipe = parse_recipe(opt.recipe);
  if (recipe_needs_constant_speed(recipe) || opt.splitting == "arc0") {
    c0 = normalize_speed(std::move(c0), {}, opt, opt.curve_file);
    c1 = normalize_speed(std::move(c1), {}, opt, opt.curve2_file);
  }

  GeodesicOptions gopts;
  gopts.tol = tol_or(opt, "energy", gopts.tol);
  gopts.max_iters = opt.iters;
  const GeodesicResult res = horizontal_geodesic(c0, c1, opt.m, recipe_builder(recipe),
                                                 opt.splitting, gopts);

  io::write_path(opt.out, res.path);
  io::write_diagnostics(output_stem(opt.out) + ".diag.csv", res);
  std::cout << "energy " << io::format_double(res.energies.back()) << "\n"
            << "iterations " << res.iterations << "\n"
            << "converged " << (res.converged ? "true" : "false") << "\n";
  return res.converged ? kExitPass : kExitNonConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sobolev type metrics, bundle splittings and horizontal paths on discrete closed plane curves"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_recipe, bool needs_splitting) {
    sub->add_option("--curve", opt.curve_file, "curve JSON file")->required();
    if (needs_recipe) sub->add_option("--recipe", opt.recipe, "operator recipe");
    if (needs_splitting) sub->add_option("--splitting", opt.splitting, "tan_nor or arc0");
    sub->add_option("--seed", opt.seed, "seed for sampled verification (default 0)");
    sub->add_flag("--strict", opt.strict, "fail instead of resampling non constant speed curves");
    sub->add_option("--tol.orthogonality", opt.tolerances["orthogonality"],
                    "orthogonality tolerance");
    sub->add_option("--tol.decomposition", opt.tolerances["decomposition"],
                    "decomposition tolerance");
    sub->add_option("--tol.symmetry", opt.tolerances["symmetry"], "symmetry tolerance");
    sub->add_option("--tol.energy", opt.tolerances["energy"],
                    "relative energy decrease stopping tolerance");
  };

  CLI::App* project = app.add_subcommand("project", "split a field into the two factors");
  add_common(project, false, true);
  project->add_option("--field", opt.field_file, "tangent field CSV")->required();
  project->add_option("--out", opt.out, "output basename; writes <out>.<factor>.csv")->required();

  CLI::App* metric = app.add_subcommand("metric", "evaluate G(h, k)");
  add_common(metric, true, false);
  metric->add_option("--field", opt.field_file, "first field CSV")->required();
  metric->add_option("--field2", opt.field2_file, "second field CSV (defaults to --field)");

  CLI::App* verify = app.add_subcommand("verify", "orthogonality/decomposition/symmetry report");
  add_common(verify, true, true);
  verify->add_option("--out", opt.out, "report file (stdout when absent)");
  verify->add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* geodesic = app.add_subcommand("geodesic", "straighten a path between two curves");
  add_common(geodesic, true, true);
  geodesic->add_option("--curve2", opt.curve2_file, "target curve JSON file")->required();
  geodesic->add_option("--m", opt.m, "number of path nodes (>= 3)");
  geodesic->add_option("--iters", opt.iters, "maximum outer iterations");
  geodesic->add_option("--out", opt.out, "path JSON file; diagnostics go to <out>.diag.csv")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    // drop zero placeholders created by the option bindings so config values
    // and library defaults can take over
    for (auto it = opt.tolerances.begin(); it != opt.tolerances.end();)
      it = it->second == 0.0 ? opt.tolerances.erase(it) : std::next(it);
    apply_config_defaults(opt);

    const bool needs_recipe = metric->parsed() || verify->parsed() || geodesic->parsed();
    if (needs_recipe && opt.recipe.empty()) {
      std::cerr << "error: --recipe is required (flag or CURVEMETRICS_CONFIG)\n";
      return kExitUsage;
    }
    const bool needs_splitting = project->parsed() || verify->parsed() || geodesic->parsed();
    if (needs_splitting && opt.splitting.empty()) {
      std::cerr << "error: --splitting is required (flag or CURVEMETRICS_CONFIG)\n";
      return kExitUsage;
    }

    if (project->parsed()) return cmd_project(opt);
    if (metric->parsed()) return cmd_metric(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return cmd_geodesic(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidCoefficients& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotConstantSpeed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const GridMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotSymmetricPositive& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotADiffeo& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NonPositiveCoefficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotImmersed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const GridTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
