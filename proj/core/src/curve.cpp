#include "curvemetrics/curve.hpp"

#include <cmath>

#include "curvemetrics/detail/interpolation.hpp"

namespace curvemetrics {

Eigen::ArrayXd theta_grid(Eigen::Index n) {
  return Eigen::ArrayXd::LinSpaced(n, 0.0, kTwoPi * static_cast<double>(n - 1) / static_cast<double>(n));
}

namespace {

Eigen::ArrayXd shift_plus(const Eigen::ArrayXd& f) {  // g_j = f_{j+1}
  const Eigen::Index n = f.size();
  Eigen::ArrayXd g(n);
  g.head(n - 1) = f.tail(n - 1);
  g[n - 1] = f[0];
  return g;
}

Eigen::ArrayXd shift_minus(const Eigen::ArrayXd& f) {  // g_j = f_{j-1}
  const Eigen::Index n = f.size();
  Eigen::ArrayXd g(n);
  g.tail(n - 1) = f.head(n - 1);
  g[0] = f[n - 1];
  return g;
}

Eigen::ArrayXd central_diff(const Eigen::ArrayXd& f) {
  const double h = kTwoPi / static_cast<double>(f.size());
  return (shift_plus(f) - shift_minus(f)) / (2.0 * h);
}

}  // namespace

ScalarField derivative_theta(const ScalarField& f) { return ScalarField(central_diff(f.values)); }

TangentField derivative_theta(const TangentField& f) {
  return TangentField(central_diff(f.x), central_diff(f.y));
}

DiscreteCurve make_curve(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  const Eigen::Index n = x.size();
  if (y.size() != n) throw GridMismatch("point components differ in length");
  if (n < 8 || n % 2 != 0) throw GridTooSmall("need an even grid with at least 8 points");

  DiscreteCurve c;
  c.n_ = n;
  c.x_ = x;
  c.y_ = y;

  const Eigen::ArrayXd dx = central_diff(x);
  const Eigen::ArrayXd dy = central_diff(y);
  Eigen::ArrayXd speed = (dx.square() + dy.square()).sqrt();

  // Central differences smooth over a single repeated point, so degeneracy is
  // checked on neighbor chords as well as on the speed itself.
  const Eigen::ArrayXd chord =
      ((shift_plus(x) - x).square() + (shift_plus(y) - y).square()).sqrt();
  const double mean_chord = chord.mean();
  const double mean_speed = speed.mean();
  if (mean_speed <= 0.0 || mean_chord <= 0.0) throw NotImmersed("curve has zero extent");
  if (chord.minCoeff() < 1e-8 * mean_chord) throw NotImmersed("coincident neighbor points");
  if (speed.minCoeff() < 1e-8 * mean_speed) throw NotImmersed("speed vanishes on the grid");

  c.speed_ = ScalarField(speed);
  const double h = kTwoPi / static_cast<double>(n);
  c.ds_ = ScalarField(speed * h);
  c.length_ = c.ds_.values.sum();

  Eigen::ArrayXd vx = dx / speed;
  Eigen::ArrayXd vy = dy / speed;
  c.tangent_ = TangentField(vx, vy);
  c.normal_ = TangentField(-vy, vx);  // n = iv, rotation by +pi/2

  const Eigen::ArrayXd dvx = central_diff(vx) / speed;
  const Eigen::ArrayXd dvy = central_diff(vy) / speed;
  c.curvature_ = ScalarField(dvx * c.normal_.x + dvy * c.normal_.y);
  return c;
}

DiscreteCurve make_curve(const TangentField& points) { return make_curve(points.x, points.y); }

double DiscreteCurve::speed_deviation() const {
  const double mean = speed_.values.mean();
  const double var = (speed_.values - mean).square().mean();
  return std::sqrt(var) / mean;
}

ScalarField arc_derivative(const DiscreteCurve& c, const ScalarField& f) {
  if (f.n() != c.n()) throw GridMismatch("field not on the curve grid");
  return ScalarField(central_diff(f.values) / c.speed().values);
}

TangentField arc_derivative(const DiscreteCurve& c, const TangentField& f) {
  if (f.n() != c.n()) throw GridMismatch("field not on the curve grid");
  return TangentField(central_diff(f.x) / c.speed().values,
                      central_diff(f.y) / c.speed().values);
}

double l2_inner(const DiscreteCurve& c, const TangentField& h, const TangentField& k) {
  if (h.n() != c.n() || k.n() != c.n()) throw GridMismatch("field not on the curve grid");
  return ((h.x * k.x + h.y * k.y) * c.ds_weights().values).sum();
}

ScalarField volume_form_variation(const DiscreteCurve& c, const TangentField& h) {
  const TangentField dh = arc_derivative(c, h);
  return ScalarField(c.tangent().x * dh.x + c.tangent().y * dh.y);
}

namespace {

// One resampling pass: 8x oversampled cubic arclength table, inverted to the
// n equispaced arclength targets.
// parameter values whose images split the interpolated curve into equal
// length arcs, computed from an 8x oversampled chord table
Eigen::ArrayXd constant_speed_parameters(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  const Eigen::Index n = x.size();
  const Eigen::Index m = 8 * n;
  Eigen::ArrayXd u(m + 1);
  for (Eigen::Index i = 0; i <= m; ++i)
    u[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(m);
  const Eigen::ArrayXd ox = detail::catmull_rom_periodic(x, u);
  const Eigen::ArrayXd oy = detail::catmull_rom_periodic(y, u);

  Eigen::ArrayXd s(m + 1);
  s[0] = 0.0;
  for (Eigen::Index i = 1; i <= m; ++i)
    s[i] = s[i - 1] + std::hypot(ox[i] - ox[i - 1], oy[i] - oy[i - 1]);

  Eigen::ArrayXd targets(n);
  for (Eigen::Index j = 0; j < n; ++j)
    targets[j] = s[m] * static_cast<double>(j) / static_cast<double>(n);
  return detail::invert_monotone(u, s, targets);
}

std::pair<Eigen::ArrayXd, Eigen::ArrayXd> resample_pass(const Eigen::ArrayXd& x,
                                                        const Eigen::ArrayXd& y) {
  const Eigen::ArrayXd uq = constant_speed_parameters(x, y);
  return {detail::catmull_rom_periodic(x, uq), detail::catmull_rom_periodic(y, uq)};
}

}  // namespace

Diffeo constant_speed_diffeo(const DiscreteCurve& c) {
  return make_diffeo(constant_speed_parameters(c.x(), c.y()));
}

DiscreteCurve reparametrize_constant_speed(const DiscreteCurve& c) {
  Eigen::ArrayXd x = c.x(), y = c.y();
  const double scale = c.total_length();
  for (int it = 0; it < 20; ++it) {
    auto [nx, ny] = resample_pass(x, y);
    const double moved = ((nx - x).abs().maxCoeff() + (ny - y).abs().maxCoeff());
    x = nx;
    y = ny;
    if (moved <= 1e-12 * scale) break;
  }
  return make_curve(x, y);
}

Diffeo make_diffeo(Eigen::ArrayXd values) {
  const Eigen::Index n = values.size();
  if (n < 8) throw GridTooSmall("diffeo needs at least 8 samples");
  for (Eigen::Index j = 1; j < n; ++j)
    if (values[j] <= values[j - 1]) throw NotADiffeo("samples not strictly increasing");
  // winding exactly one: the periodic continuation phi_0 + 2*pi must continue
  // the increase
  if (values[0] + kTwoPi <= values[n - 1]) throw NotADiffeo("winding exceeds one");
  Diffeo d;
  d.values = std::move(values);
  return d;
}

Diffeo grid_shift_diffeo(Eigen::Index n, Eigen::Index k) {
  const double h = kTwoPi / static_cast<double>(n);
  Eigen::ArrayXd v = theta_grid(n) + static_cast<double>(k) * h;
  return make_diffeo(std::move(v));
}

DiscreteCurve apply_diffeo(const DiscreteCurve& c, const Diffeo& phi) {
  if (phi.n() != c.n()) throw GridMismatch("diffeo not on the curve grid");
  const Eigen::ArrayXd nx = detail::catmull_rom_periodic(c.x(), phi.values);
  const Eigen::ArrayXd ny = detail::catmull_rom_periodic(c.y(), phi.values);
  return make_curve(nx, ny);
}

TangentField apply_diffeo_field(const TangentField& h, const Diffeo& phi, const DiscreteCurve& c) {
  if (phi.n() != c.n() || h.n() != c.n()) throw GridMismatch("field/diffeo grid mismatch");
  return TangentField(detail::catmull_rom_periodic(h.x, phi.values),
                      detail::catmull_rom_periodic(h.y, phi.values));
}

Diffeo invert_diffeo(const Diffeo& phi) {
  const Eigen::Index n = phi.n();
  Eigen::ArrayXd t(n + 1), g(n + 1);
  t.head(n) = theta_grid(n);
  t[n] = kTwoPi;
  g.head(n) = phi.values;
  g[n] = phi.values[0] + kTwoPi;

  Eigen::ArrayXd psi(n);
  const Eigen::ArrayXd th = theta_grid(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double q = th[j];
    double lift = 0.0;
    while (q < g[0]) {
      q += kTwoPi;
      lift -= kTwoPi;
    }
    while (q >= g[n]) {
      q -= kTwoPi;
      lift += kTwoPi;
    }
    Eigen::ArrayXd qq(1);
    qq[0] = q;
    psi[j] = detail::invert_monotone(t, g, qq)[0] + lift;
  }
  // psi is increasing up to the 2*pi lift convention; rebase so make_diffeo
  // sees one monotone period
  for (Eigen::Index j = 1; j < n; ++j)
    while (psi[j] <= psi[j - 1]) psi[j] += kTwoPi;
  return make_diffeo(std::move(psi));
}

}  // namespace curvemetrics
