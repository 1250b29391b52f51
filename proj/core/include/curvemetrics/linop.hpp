#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "curvemetrics/curve.hpp"

namespace curvemetrics {

// Dense linear operator on the 2N stacked degrees of freedom of a tangent
// field, carrying the curve whose quadrature weights define L2(ds) adjoints.
class LinOp {
 public:
  LinOp(std::shared_ptr<const DiscreteCurve> curve, Eigen::MatrixXd entries);

  const DiscreteCurve& curve() const { return *curve_; }
  std::shared_ptr<const DiscreteCurve> curve_ptr() const { return curve_; }
  const Eigen::MatrixXd& entries() const { return m_; }
  Eigen::Index n() const { return curve_->n(); }

  static LinOp identity(std::shared_ptr<const DiscreteCurve> curve);

 private:
  std::shared_ptr<const DiscreteCurve> curve_;
  Eigen::MatrixXd m_;
};

TangentField apply(const LinOp& A, const TangentField& h);

// A* = W^-1 A^T W with W = diag(ds, ds); satisfies
// l2_inner(A h, k) = l2_inner(h, A* k) for all grid fields.
LinOp adjoint_l2(const LinOp& A);

LinOp compose(const LinOp& A, const LinOp& B);
LinOp add(const LinOp& A, const LinOp& B);
LinOp scale(const LinOp& A, double lambda);

// D_s as a matrix (block diagonal over the two components).
LinOp arc_derivative_operator(std::shared_ptr<const DiscreteCurve> curve);

// sum_m coeffs[m] (-1)^m D_s^(2m), symmetrized to (A + A*)/2 after assembly.
// Requires coeffs.size() == l+1, coeffs[0] > 0 and coeffs[m] >= 0.
LinOp sobolev_operator(std::shared_ptr<const DiscreteCurve> curve, int l,
                       const std::vector<double>& coeffs);

// Pointwise multiplication h -> phi * h; phi strictly positive.
LinOp almost_local_operator(std::shared_ptr<const DiscreteCurve> curve, const ScalarField& phi);

struct SymmetryReport {
  double max_asymmetry = 0.0;  // max |<Ah,k> - <h,Ak>| over unit pairs, relative to scale
  double min_rayleigh = 0.0;   // min <Ah,h>/<h,h> over samples (or exact eigenvalue)
  double scale = 0.0;          // max |<Ah,k>| over the sampled pairs
  bool pass = false;
};

// Sampled symmetry/positivity check (200 band limited fields by default);
// exact=true replaces the Rayleigh sampling with a full eigendecomposition of
// the symmetrized similarity W^1/2 A W^-1/2.
SymmetryReport is_symmetric_positive(const LinOp& A, double tol, std::uint32_t seed = 0,
                                     int samples = 200, bool exact = false);

}  // namespace curvemetrics
