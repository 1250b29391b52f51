#pragma once

#include <Eigen/Dense>

namespace curvemetrics::detail {

// Periodic uniform Catmull-Rom interpolation of samples p on theta_j =
// 2*pi*j/n, evaluated at parameters u (radians, any real).  Evaluation points
// within 1e-12 grid units of a knot snap to the sample value, so grid-aligned
// shifts are exact.
Eigen::ArrayXd catmull_rom_periodic(const Eigen::ArrayXd& p, const Eigen::ArrayXd& u);

// Piecewise linear inverse of a strictly increasing map g over one period:
// given samples g_i at parameters t_i (both strictly increasing, g lifted so
// g_end = g_0 + period), returns t with g(t) = q for each query q.
Eigen::ArrayXd invert_monotone(const Eigen::ArrayXd& t, const Eigen::ArrayXd& g,
                               const Eigen::ArrayXd& q);

}  // namespace curvemetrics::detail
