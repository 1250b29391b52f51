#pragma once

#include <memory>

#include "curvemetrics/curve.hpp"

namespace cmtest {

using curvemetrics::DiscreteCurve;
using curvemetrics::kTwoPi;

inline std::shared_ptr<const DiscreteCurve> shared(DiscreteCurve c) {
  return std::make_shared<const DiscreteCurve>(std::move(c));
}

inline DiscreteCurve circle(double r, Eigen::Index n) {
  const Eigen::ArrayXd th = curvemetrics::theta_grid(n);
  return curvemetrics::make_curve(r * th.cos(), r * th.sin());
}

inline DiscreteCurve ellipse(double a, double b, Eigen::Index n) {
  const Eigen::ArrayXd th = curvemetrics::theta_grid(n);
  return curvemetrics::make_curve(a * th.cos(), b * th.sin());
}

// r(theta) = 1 + amp cos(mode theta)
inline DiscreteCurve perturbed_circle(double amp, int mode, Eigen::Index n) {
  const Eigen::ArrayXd th = curvemetrics::theta_grid(n);
  const Eigen::ArrayXd r = 1.0 + amp * (mode * th).cos();
  return curvemetrics::make_curve(r * th.cos(), r * th.sin());
}

// unit circle traversed at phi(theta) = theta + amp sin(theta): non constant
// speed but exact curvature 1
inline DiscreteCurve reparametrized_circle(double amp, Eigen::Index n, double radius = 1.0) {
  const Eigen::ArrayXd th = curvemetrics::theta_grid(n);
  const Eigen::ArrayXd phi = th + amp * th.sin();
  return curvemetrics::make_curve(radius * phi.cos(), radius * phi.sin());
}

}  // namespace cmtest
