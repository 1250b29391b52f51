#pragma once

#include <Eigen/Dense>

#include "curvemetrics/errors.hpp"

namespace curvemetrics {

// Periodic scalar function sampled on the uniform theta grid.
struct ScalarField {
  Eigen::ArrayXd values;

  ScalarField() = default;
  explicit ScalarField(Eigen::ArrayXd v) : values(std::move(v)) {}
  static ScalarField Zero(Eigen::Index n) { return ScalarField(Eigen::ArrayXd::Zero(n)); }
  static ScalarField Constant(Eigen::Index n, double c) {
    return ScalarField(Eigen::ArrayXd::Constant(n, c));
  }

  Eigen::Index n() const { return values.size(); }
  double operator[](Eigen::Index j) const { return values[j]; }
  double& operator[](Eigen::Index j) { return values[j]; }
};

// Vector field along a curve; x and y components on the grid.  The stacked
// representation (x block then y block) is what LinOp matrices act on.
struct TangentField {
  Eigen::ArrayXd x;
  Eigen::ArrayXd y;

  TangentField() = default;
  TangentField(Eigen::ArrayXd xs, Eigen::ArrayXd ys) : x(std::move(xs)), y(std::move(ys)) {
    if (x.size() != y.size()) throw GridMismatch("tangent field components differ in length");
  }
  static TangentField Zero(Eigen::Index n) {
    return TangentField(Eigen::ArrayXd::Zero(n), Eigen::ArrayXd::Zero(n));
  }

  Eigen::Index n() const { return x.size(); }

  Eigen::VectorXd stacked() const {
    Eigen::VectorXd s(2 * n());
    s.head(n()) = x.matrix();
    s.tail(n()) = y.matrix();
    return s;
  }
  static TangentField from_stacked(const Eigen::VectorXd& s) {
    const Eigen::Index n = s.size() / 2;
    if (2 * n != s.size()) throw GridMismatch("stacked vector has odd length");
    return TangentField(s.head(n).array(), s.tail(n).array());
  }
};

inline TangentField operator+(const TangentField& a, const TangentField& b) {
  if (a.n() != b.n()) throw GridMismatch("tangent field sizes differ");
  return TangentField(a.x + b.x, a.y + b.y);
}
inline TangentField operator-(const TangentField& a, const TangentField& b) {
  if (a.n() != b.n()) throw GridMismatch("tangent field sizes differ");
  return TangentField(a.x - b.x, a.y - b.y);
}
inline TangentField operator*(double s, const TangentField& a) {
  return TangentField(s * a.x, s * a.y);
}

// Lifted samples of an orientation-preserving circle diffeomorphism:
// strictly increasing with winding exactly one.  Construct via make_diffeo.
struct Diffeo {
  Eigen::ArrayXd values;
  Eigen::Index n() const { return values.size(); }
};

Diffeo make_diffeo(Eigen::ArrayXd values);

}  // namespace curvemetrics
