#pragma once

#include <memory>

#include <Eigen/Dense>

#include "curvemetrics/fields.hpp"

namespace curvemetrics {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Uniform grid theta_j = 2*pi*j/n.
Eigen::ArrayXd theta_grid(Eigen::Index n);

// Immutable discretization of a closed immersed plane curve with its cached
// geometry.  Conventions: periodic second order central differences for
// d/dtheta, n = iv with i the rotation by +pi/2 (counterclockwise unit circle
// has curvature +1 and inward normal), rectangle quadrature ds = |c'|*2pi/n.
class DiscreteCurve {
 public:
  Eigen::Index n() const { return n_; }
  const Eigen::ArrayXd& x() const { return x_; }
  const Eigen::ArrayXd& y() const { return y_; }
  const ScalarField& speed() const { return speed_; }
  const ScalarField& ds_weights() const { return ds_; }
  const TangentField& tangent() const { return tangent_; }
  const TangentField& normal() const { return normal_; }
  const ScalarField& curvature() const { return curvature_; }
  double total_length() const { return length_; }

  TangentField points() const { return TangentField(x_, y_); }

  // Relative standard deviation of the speed field; the constant speed
  // predicate used by the Arc0 machinery is speed_deviation() < 1e-3.
  double speed_deviation() const;

 private:
  friend DiscreteCurve make_curve(const Eigen::ArrayXd&, const Eigen::ArrayXd&);
  DiscreteCurve() = default;

  Eigen::Index n_ = 0;
  Eigen::ArrayXd x_, y_;
  ScalarField speed_, ds_, curvature_;
  TangentField tangent_, normal_;
  double length_ = 0.0;
};

// Builds the curve and all cached fields.  Throws GridTooSmall (n < 8 or odd)
// and NotImmersed (speed or neighbor chord below 1e-8 of its mean).
DiscreteCurve make_curve(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y);
DiscreteCurve make_curve(const TangentField& points);

// Periodic central difference d/dtheta.
ScalarField derivative_theta(const ScalarField& f);
TangentField derivative_theta(const TangentField& f);

// Arclength derivative D_s = (1/|c'|) d/dtheta.
ScalarField arc_derivative(const DiscreteCurve& c, const ScalarField& f);
TangentField arc_derivative(const DiscreteCurve& c, const TangentField& f);

// Integral of <h,k> ds by the rectangle rule.
double l2_inner(const DiscreteCurve& c, const TangentField& h, const TangentField& k);

// Density factor <v, D_s h> of the first variation of ds along h.
ScalarField volume_form_variation(const DiscreteCurve& c, const TangentField& h);

// Iterated resampling to constant speed parametrization.  Keeps the image and
// the base point c(0); idempotent on already constant speed curves.
DiscreteCurve reparametrize_constant_speed(const DiscreteCurve& c);

// One resampling pass as a Diffeo, so fields living on c can be transported
// onto the resampled curve with apply_diffeo_field.
Diffeo constant_speed_diffeo(const DiscreteCurve& c);

// Composition with a circle diffeomorphism (periodic cubic interpolation at
// the points phi(theta_j)).
DiscreteCurve apply_diffeo(const DiscreteCurve& c, const Diffeo& phi);
TangentField apply_diffeo_field(const TangentField& h, const Diffeo& phi, const DiscreteCurve& c);

// Grid shift by k indices as a Diffeo (exact on the grid).
Diffeo grid_shift_diffeo(Eigen::Index n, Eigen::Index k);

// Discrete inverse of phi by monotone interpolation of the lifted samples.
Diffeo invert_diffeo(const Diffeo& phi);

}  // namespace curvemetrics
