#include "curvemetrics/detail/interpolation.hpp"

#include <cmath>

#include "curvemetrics/curve.hpp"
#include "curvemetrics/errors.hpp"

namespace curvemetrics::detail {

namespace {
constexpr double kKnotSnap = 1e-12;
}

Eigen::ArrayXd catmull_rom_periodic(const Eigen::ArrayXd& p, const Eigen::ArrayXd& u) {
  const Eigen::Index n = p.size();
  const double h = kTwoPi / static_cast<double>(n);
  Eigen::ArrayXd out(u.size());
  for (Eigen::Index q = 0; q < u.size(); ++q) {
    double t = u[q] / h;
    double base = std::floor(t);
    double s = t - base;
    auto wrap = [n](long long j) {
      long long r = j % n;
      return static_cast<Eigen::Index>(r < 0 ? r + n : r);
    };
    const long long j = static_cast<long long>(base);
    if (s < kKnotSnap) {
      out[q] = p[wrap(j)];
      continue;
    }
    if (1.0 - s < kKnotSnap) {
      out[q] = p[wrap(j + 1)];
      continue;
    }
    const double p0 = p[wrap(j - 1)];
    const double p1 = p[wrap(j)];
    const double p2 = p[wrap(j + 1)];
    const double p3 = p[wrap(j + 2)];
    out[q] = 0.5 * (2.0 * p1 + s * (-p0 + p2) + s * s * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) +
                    s * s * s * (-p0 + 3.0 * p1 - 3.0 * p2 + p3));
  }
  return out;
}

Eigen::ArrayXd invert_monotone(const Eigen::ArrayXd& t, const Eigen::ArrayXd& g,
                               const Eigen::ArrayXd& q) {
  if (t.size() != g.size() || t.size() < 2) throw GridMismatch("invert_monotone sample mismatch");
  Eigen::ArrayXd out(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    const double v = q[i];
    // last index with g[lo] <= v (queries are clamped to the sampled range)
    Eigen::Index lo = 0, hi = g.size() - 1;
    if (v <= g[0]) {
      out[i] = t[0];
      continue;
    }
    if (v >= g[g.size() - 1]) {
      out[i] = t[t.size() - 1];
      continue;
    }
    while (hi - lo > 1) {
      const Eigen::Index mid = (lo + hi) / 2;
      (g[mid] <= v ? lo : hi) = mid;
    }
    const double den = g[lo + 1] - g[lo];
    const double w = den > 0.0 ? (v - g[lo]) / den : 0.0;
    out[i] = t[lo] + w * (t[lo + 1] - t[lo]);
  }
  return out;
}

}  // namespace curvemetrics::detail
