#include "curvemetrics/splitting.hpp"

#include <cmath>

namespace curvemetrics {

namespace {

void require_constant_speed(const DiscreteCurve& c) {
  if (c.speed_deviation() >= 1e-3)
    throw NotConstantSpeed("curve is not constant speed (relative deviation " +
                           std::to_string(c.speed_deviation()) + ")");
}

Eigen::MatrixXd pointwise_projection(const TangentField& dir) {
  const Eigen::Index n = dir.n();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    p(j, j) = dir.x[j] * dir.x[j];
    p(j, n + j) = dir.x[j] * dir.y[j];
    p(n + j, j) = dir.y[j] * dir.x[j];
    p(n + j, n + j) = dir.y[j] * dir.y[j];
  }
  return p;
}

}  // namespace

Splitting tan_nor_splitting(std::shared_ptr<const DiscreteCurve> curve) {
  LinOp tan(curve, pointwise_projection(curve->tangent()));
  LinOp nor(curve, pointwise_projection(curve->normal()));
  return Splitting{std::move(tan), std::move(nor), "Tan", "Nor"};
}

ScalarField solve_b(const DiscreteCurve& c, const ScalarField& a) {
  if (a.n() != c.n()) throw GridMismatch("field not on the curve grid");
  require_constant_speed(c);

  const Eigen::Index n = c.n();
  const double h = kTwoPi / static_cast<double>(n);
  const Eigen::ArrayXd ak = a.values * c.curvature().values;
  const double constant = -(ak * c.ds_weights().values).sum() / c.total_length();

  // b' (in theta) = (a*kappa + C) * speed, integrated by cumulative trapezoid
  const Eigen::ArrayXd g = (ak + constant) * c.speed().values;
  Eigen::ArrayXd b(n);
  b[0] = 0.0;
  for (Eigen::Index j = 1; j < n; ++j) b[j] = b[j - 1] + 0.5 * h * (g[j - 1] + g[j]);
  return ScalarField(std::move(b));
}

namespace {

// P^Arc0 k = <k,n> n + b v and P^Tan k = <k,v> v - b v with b = solve_b(<k,n>).
// Both columns share b, so the two matrices sum to the identity up to frame
// roundoff.
void arc0_columns(const DiscreteCurve& c, const TangentField& k, Eigen::VectorXd& first,
                  Eigen::VectorXd& second) {
  const TangentField& v = c.tangent();
  const TangentField& nor = c.normal();
  const Eigen::ArrayXd a = k.x * nor.x + k.y * nor.y;
  const Eigen::ArrayXd bt = k.x * v.x + k.y * v.y;
  const Eigen::ArrayXd b = solve_b(c, ScalarField(a)).values;
  second = TangentField(a * nor.x + b * v.x, a * nor.y + b * v.y).stacked();
  first = TangentField((bt - b) * v.x, (bt - b) * v.y).stacked();
}

}  // namespace

Splitting arc0_splitting(std::shared_ptr<const DiscreteCurve> curve) {
  require_constant_speed(*curve);
  const Eigen::Index n = curve->n();
  Eigen::MatrixXd p1(2 * n, 2 * n), p2(2 * n, 2 * n);
  Eigen::VectorXd col1, col2;
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    TangentField e = TangentField::Zero(n);
    if (i < n)
      e.x[i] = 1.0;
    else
      e.y[i - n] = 1.0;
    arc0_columns(*curve, e, col1, col2);
    p1.col(i) = col1;
    p2.col(i) = col2;
  }
  return Splitting{LinOp(curve, std::move(p1)), LinOp(curve, std::move(p2)), "Tan", "Arc0"};
}

ScalarField speed_preservation_residual(const DiscreteCurve& c, const TangentField& h) {
  if (h.n() != c.n()) throw GridMismatch("field not on the curve grid");
  require_constant_speed(c);
  const TangentField dh = arc_derivative(c, h);
  const TangentField d2h = arc_derivative(c, dh);
  const Eigen::ArrayXd lhs = d2h.x * c.tangent().x + d2h.y * c.tangent().y +
                             c.curvature().values * (dh.x * c.normal().x + dh.y * c.normal().y);
  return ScalarField(lhs);
}

SplittingReport verify_splitting(const Splitting& s, double tol) {
  const Eigen::MatrixXd& p1 = s.p_first.entries();
  const Eigen::MatrixXd& p2 = s.p_second.entries();
  const Eigen::Index d = p1.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);

  SplittingReport rep;
  rep.idempotence_first = (p1 * p1 - p1).cwiseAbs().maxCoeff();
  rep.idempotence_second = (p2 * p2 - p2).cwiseAbs().maxCoeff();
  rep.complementarity = (p1 + p2 - id).cwiseAbs().maxCoeff();
  rep.annihilation = (p1 * p2).cwiseAbs().maxCoeff();
  rep.pass = rep.idempotence_first < tol && rep.idempotence_second < tol &&
             rep.complementarity < tol && rep.annihilation < tol;
  return rep;
}

}  // namespace curvemetrics
