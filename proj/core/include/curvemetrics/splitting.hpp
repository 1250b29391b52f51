#pragma once

#include <string>

#include "curvemetrics/linop.hpp"

namespace curvemetrics {

// Ordered pair of complementary projections of the tangent space at a curve.
// p_second projects onto the bundle used as horizontal by the path solver.
struct Splitting {
  LinOp p_first;
  LinOp p_second;
  std::string label_first;
  std::string label_second;

  const DiscreteCurve& curve() const { return p_first.curve(); }
  std::shared_ptr<const DiscreteCurve> curve_ptr() const { return p_first.curve_ptr(); }
};

// Pointwise tangential/normal projections <h,v>v and <h,n>n.  Both are
// self-adjoint for the ds inner product.
Splitting tan_nor_splitting(std::shared_ptr<const DiscreteCurve> curve);

// Solves D_s^2 b = D_s(a * kappa) with b periodic and b(0) = 0 on a constant
// speed curve.  Integrating once gives D_s b = a*kappa + C; periodicity fixes
// C = -(1/len) * integral of a*kappa ds, then b is the cumulative trapezoid
// integral of (a*kappa + C)*speed from theta = 0.
ScalarField solve_b(const DiscreteCurve& c, const ScalarField& a);

// Splitting into parametrization direction and constant speed preserving
// fields: with a = <k,n>, b = solve_b(a),
//   p_second(k) = <k,n> n + b v   (speed preserving part)
//   p_first(k)  = <k,v> v - b v   (tangential part)
// Assembled column by column over the 2N basis fields.
Splitting arc0_splitting(std::shared_ptr<const DiscreteCurve> curve);

// Left hand side field <D_s^2 h, v> + kappa <D_s h, n>; zero exactly when h
// preserves constant speed parametrization to first order.
ScalarField speed_preservation_residual(const DiscreteCurve& c, const TangentField& h);

struct SplittingReport {
  double idempotence_first = 0.0;
  double idempotence_second = 0.0;
  double complementarity = 0.0;
  double annihilation = 0.0;
  bool pass = false;
};

// Max-abs-entry norms of P^2 - P (both), P1 + P2 - Id, and P1*P2.
// pass iff all four defects are < tol.
SplittingReport verify_splitting(const Splitting& s, double tol);

}  // namespace curvemetrics
