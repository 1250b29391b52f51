#pragma once

#include <vector>

#include "curvemetrics/metric.hpp"
#include "curvemetrics/recipe.hpp"

namespace curvemetrics {

// Discrete path of curves on a common grid; endpoints are boundary data.
struct CurvePath {
  std::vector<DiscreteCurve> curves;

  Eigen::Index m() const { return static_cast<Eigen::Index>(curves.size()); }
  double dt() const { return 1.0 / static_cast<double>(m() - 1); }
};

CurvePath make_path(std::vector<DiscreteCurve> curves);

// Trapezoidal Riemannian energy: for each segment the difference quotient
// v_k = (c_{k+1} - c_k)/dt is paired with the metric at both endpoints,
// E = sum dt/2 * (G_{c_k}(v_k,v_k) + G_{c_{k+1}}(v_k,v_k)).
// Symmetric under path reversal by construction.
double path_energy(const CurvePath& p, const OperatorBuilder& builder);

// horizontality_residual of each difference quotient at its left curve.
std::vector<double> path_horizontality_report(const CurvePath& p, const OperatorBuilder& builder);

struct GeodesicOptions {
  double tol = 1e-8;    // relative energy decrease per iteration
  int max_iters = 500;
  int max_backtracks = 30;
};

struct GeodesicResult {
  CurvePath path;
  std::vector<double> energies;       // accepted energies, nonincreasing
  std::vector<double> step_sizes;     // accepted step per iteration
  std::vector<double> max_residuals;  // max horizontality residual, per energies entry
  std::vector<double> residuals;      // final horizontality residuals per segment
  int iterations = 0;
  bool converged = false;             // false: iteration budget hit
};

// Path straightening between fixed endpoints: steepest descent on the energy
// with the inertia operator frozen per outer iteration, update directions
// projected onto p_second of the splitting built at each interior curve, an
// exact step on the frozen quadratic model, then backtracking on the true
// energy.  Steps that leave the immersion set are rejected and halved.
GeodesicResult horizontal_geodesic(const DiscreteCurve& c0, const DiscreteCurve& c1,
                                   Eigen::Index m, const OperatorBuilder& builder,
                                   const std::string& splitting_tag,
                                   const GeodesicOptions& opts = {});

}  // namespace curvemetrics
