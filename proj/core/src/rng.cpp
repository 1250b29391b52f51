#include "curvemetrics/rng.hpp"

#include <cmath>

#include "curvemetrics/curve.hpp"

namespace curvemetrics {

double RandomStream::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

ScalarField band_limited_field(Eigen::Index n, RandomStream& stream, int kmax,
                               const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != kmax + 1)
    throw InvalidCoefficients("band_limited_field: weights must have kmax+1 entries");
  const Eigen::ArrayXd th = theta_grid(n);
  Eigen::ArrayXd f = Eigen::ArrayXd::Zero(n);
  for (int m = 0; m <= kmax; ++m) {
    const double a = stream.normal();
    const double b = stream.normal();
    f += weights[static_cast<size_t>(m)] * (a * (m * th).cos() + b * (m * th).sin());
  }
  return ScalarField(std::move(f));
}

TangentField random_tangent_field(Eigen::Index n, RandomStream& stream, int kmax) {
  std::vector<double> w(static_cast<size_t>(kmax) + 1);
  for (int m = 0; m <= kmax; ++m) w[static_cast<size_t>(m)] = 1.0 / (1.0 + m * m);
  ScalarField fx = band_limited_field(n, stream, kmax, w);
  ScalarField fy = band_limited_field(n, stream, kmax, w);
  return TangentField(std::move(fx.values), std::move(fy.values));
}

}  // namespace curvemetrics
