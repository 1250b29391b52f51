#include "curvemetrics/linop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvemetrics/rng.hpp"

namespace curvemetrics {

LinOp::LinOp(std::shared_ptr<const DiscreteCurve> curve, Eigen::MatrixXd entries)
    : curve_(std::move(curve)), m_(std::move(entries)) {
  if (!curve_) throw GridMismatch("operator needs a curve");
  const Eigen::Index d = 2 * curve_->n();
  if (m_.rows() != d || m_.cols() != d) throw GridMismatch("operator dimension mismatch");
  if (!m_.allFinite()) throw InvalidCoefficients("operator has non-finite entries");
}

LinOp LinOp::identity(std::shared_ptr<const DiscreteCurve> curve) {
  const Eigen::Index d = 2 * curve->n();
  return LinOp(std::move(curve), Eigen::MatrixXd::Identity(d, d));
}

TangentField apply(const LinOp& A, const TangentField& h) {
  if (h.n() != A.n()) throw GridMismatch("field not on the operator grid");
  return TangentField::from_stacked(A.entries() * h.stacked());
}

namespace {

Eigen::VectorXd stacked_weights(const DiscreteCurve& c) {
  const Eigen::Index n = c.n();
  Eigen::VectorXd w(2 * n);
  w.head(n) = c.ds_weights().values.matrix();
  w.tail(n) = c.ds_weights().values.matrix();
  return w;
}

}  // namespace

LinOp adjoint_l2(const LinOp& A) {
  const Eigen::VectorXd w = stacked_weights(A.curve());
  Eigen::MatrixXd adj = w.cwiseInverse().asDiagonal() * A.entries().transpose() * w.asDiagonal();
  return LinOp(A.curve_ptr(), std::move(adj));
}

LinOp compose(const LinOp& A, const LinOp& B) {
  if (A.n() != B.n()) throw GridMismatch("operator grids differ");
  return LinOp(A.curve_ptr(), A.entries() * B.entries());
}

LinOp add(const LinOp& A, const LinOp& B) {
  if (A.n() != B.n()) throw GridMismatch("operator grids differ");
  return LinOp(A.curve_ptr(), A.entries() + B.entries());
}

LinOp scale(const LinOp& A, double lambda) { return LinOp(A.curve_ptr(), lambda * A.entries()); }

LinOp arc_derivative_operator(std::shared_ptr<const DiscreteCurve> curve) {
  const Eigen::Index n = curve->n();
  const double h = kTwoPi / static_cast<double>(n);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double c = 1.0 / (2.0 * h * curve->speed().values[j]);
    const Eigen::Index jp = (j + 1) % n;
    const Eigen::Index jm = (j + n - 1) % n;
    d(j, jp) = c;
    d(j, jm) = -c;
    d(n + j, n + jp) = c;
    d(n + j, n + jm) = -c;
  }
  return LinOp(std::move(curve), std::move(d));
}

LinOp sobolev_operator(std::shared_ptr<const DiscreteCurve> curve, int l,
                       const std::vector<double>& coeffs) {
  if (l < 0) throw InvalidCoefficients("sobolev order must be nonnegative");
  if (static_cast<int>(coeffs.size()) != l + 1)
    throw InvalidCoefficients("sobolev needs l+1 coefficients");
  if (!(coeffs[0] > 0.0)) throw InvalidCoefficients("zeroth sobolev coefficient must be positive");
  for (double c : coeffs)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw InvalidCoefficients("sobolev coefficients must be finite and nonnegative");

  const Eigen::Index d = 2 * curve->n();
  const LinOp ds = arc_derivative_operator(curve);
  const Eigen::MatrixXd ds2 = ds.entries() * ds.entries();

  Eigen::MatrixXd acc = coeffs[0] * Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(d, d);
  double sign = 1.0;
  for (int m = 1; m <= l; ++m) {
    power = power * ds2;
    sign = -sign;
    if (coeffs[static_cast<size_t>(m)] != 0.0)
      acc += coeffs[static_cast<size_t>(m)] * sign * power;
  }
  LinOp raw(curve, std::move(acc));
  return scale(add(raw, adjoint_l2(raw)), 0.5);
}

LinOp almost_local_operator(std::shared_ptr<const DiscreteCurve> curve, const ScalarField& phi) {
  const Eigen::Index n = curve->n();
  if (phi.n() != n) throw GridMismatch("coefficient field not on the curve grid");
  if (!(phi.values.minCoeff() > 0.0))
    throw NonPositiveCoefficient("almost local coefficient must be strictly positive");
  Eigen::VectorXd diag(2 * n);
  diag.head(n) = phi.values.matrix();
  diag.tail(n) = phi.values.matrix();
  return LinOp(std::move(curve), Eigen::MatrixXd(diag.asDiagonal()));
}

SymmetryReport is_symmetric_positive(const LinOp& A, double tol, std::uint32_t seed, int samples,
                                     bool exact) {
  const Eigen::Index d = A.entries().rows();
  const Eigen::VectorXd w = stacked_weights(A.curve());
  RandomStream stream(seed);

  SymmetryReport rep;
  double max_defect = 0.0;
  double scale = 0.0;
  double min_rayleigh = std::numeric_limits<double>::infinity();

  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd hvec(d), kvec(d);
    for (Eigen::Index i = 0; i < d; ++i) hvec[i] = stream.normal();
    for (Eigen::Index i = 0; i < d; ++i) kvec[i] = stream.normal();
    hvec /= std::sqrt(hvec.dot(w.cwiseProduct(hvec)));
    kvec /= std::sqrt(kvec.dot(w.cwiseProduct(kvec)));

    const Eigen::VectorXd Ah = A.entries() * hvec;
    const Eigen::VectorXd Ak = A.entries() * kvec;
    const double p1 = Ah.dot(w.cwiseProduct(kvec));
    const double p2 = hvec.dot(w.cwiseProduct(Ak));
    max_defect = std::max(max_defect, std::abs(p1 - p2));
    scale = std::max({scale, std::abs(p1), std::abs(p2)});
    min_rayleigh = std::min({min_rayleigh, Ah.dot(w.cwiseProduct(hvec)),
                             Ak.dot(w.cwiseProduct(kvec))});
  }

  if (exact) {
    // similarity W^1/2 A W^-1/2 is symmetric exactly when A is W-self-adjoint
    const Eigen::VectorXd ws = w.cwiseSqrt();
    const Eigen::MatrixXd s =
        ws.asDiagonal() * A.entries() * ws.cwiseInverse().asDiagonal();
    const Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    min_rayleigh = es.eigenvalues().minCoeff();
  }

  rep.scale = scale;
  rep.max_asymmetry = scale > 0.0 ? max_defect / scale : max_defect;
  rep.min_rayleigh = min_rayleigh;
  rep.pass = rep.max_asymmetry < tol && rep.min_rayleigh > 0.0;
  return rep;
}

}  // namespace curvemetrics
