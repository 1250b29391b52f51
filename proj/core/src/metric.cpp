#include "curvemetrics/metric.hpp"

#include <cmath>

namespace curvemetrics {

namespace {

Eigen::VectorXd stacked_weights(const DiscreteCurve& c) {
  const Eigen::Index n = c.n();
  Eigen::VectorXd w(2 * n);
  w.head(n) = c.ds_weights().values.matrix();
  w.tail(n) = c.ds_weights().values.matrix();
  return w;
}

void require_constant_speed(const DiscreteCurve& c) {
  if (c.speed_deviation() >= 1e-3) throw NotConstantSpeed("curve is not constant speed");
}

double horizontality_residual_op(const LinOp& L, const TangentField& h) {
  const DiscreteCurve& c = L.curve();
  const TangentField lh = apply(L, h);
  const Eigen::ArrayXd tang = lh.x * c.tangent().x + lh.y * c.tangent().y;
  const double den2 = ((lh.x.square() + lh.y.square()) * c.ds_weights().values).sum();
  if (den2 <= 0.0) return 0.0;
  const double num2 = (tang.square() * c.ds_weights().values).sum();
  return std::sqrt(num2 / den2);
}

}  // namespace

Metric metric_from_operator(std::shared_ptr<const DiscreteCurve> curve, const LinOp& L) {
  if (L.n() != curve->n()) throw GridMismatch("operator not on the curve grid");
  const SymmetryReport rep = is_symmetric_positive(L, 1e-8);
  if (!rep.pass)
    throw NotSymmetricPositive("inertia operator fails symmetry/positivity (asymmetry " +
                               std::to_string(rep.max_asymmetry) + ", min Rayleigh " +
                               std::to_string(rep.min_rayleigh) + ")");
  return Metric{L, "direct"};
}

double eval(const Metric& G, const TangentField& h, const TangentField& k) {
  if (h.n() != G.op.n() || k.n() != G.op.n()) throw GridMismatch("field not on the metric grid");
  const Eigen::VectorXd w = stacked_weights(G.curve());
  const Eigen::VectorXd lh = G.op.entries() * h.stacked();
  return lh.dot(w.cwiseProduct(k.stacked()));
}

Metric prescribed_splitting_metric(std::shared_ptr<const DiscreteCurve> curve, const Splitting& s,
                                   const LinOp& Ltilde) {
  if (s.p_first.n() != curve->n() || Ltilde.n() != curve->n())
    throw GridMismatch("splitting/operator not on the curve grid");
  const SymmetryReport rep = is_symmetric_positive(Ltilde, 1e-8);
  if (!rep.pass)
    throw NotSymmetricPositive("inner operator fails symmetry/positivity (asymmetry " +
                               std::to_string(rep.max_asymmetry) + ", min Rayleigh " +
                               std::to_string(rep.min_rayleigh) + ")");

  const LinOp t1 = compose(adjoint_l2(s.p_first), compose(Ltilde, s.p_first));
  const LinOp t2 = compose(adjoint_l2(s.p_second), compose(Ltilde, s.p_second));
  LinOp L = add(t1, t2);
  return Metric{std::move(L), "prescribed(" + s.label_first + "/" + s.label_second + ")"};
}

double orthogonality_defect(const Metric& G, const Splitting& s) {
  if (s.p_first.n() != G.op.n()) throw GridMismatch("splitting not on the metric grid");
  const Eigen::VectorXd w = stacked_weights(G.curve());
  const Eigen::MatrixXd ltw = G.op.entries().transpose() * w.asDiagonal();
  const Eigen::MatrixXd cross = s.p_first.entries().transpose() * ltw * s.p_second.entries();
  const Eigen::VectorXd d1 =
      (s.p_first.entries().transpose() * ltw * s.p_first.entries()).diagonal();
  const Eigen::VectorXd d2 =
      (s.p_second.entries().transpose() * ltw * s.p_second.entries()).diagonal();

  // skip directions annihilated by a projection (zero diagonal up to roundoff)
  const double floor1 = 1e-14 * d1.cwiseAbs().maxCoeff();
  const double floor2 = 1e-14 * d2.cwiseAbs().maxCoeff();
  double defect = 0.0;
  for (Eigen::Index i = 0; i < cross.rows(); ++i) {
    if (d1[i] <= floor1) continue;
    for (Eigen::Index j = 0; j < cross.cols(); ++j) {
      if (d2[j] <= floor2) continue;
      defect = std::max(defect, std::abs(cross(i, j)) / std::sqrt(d1[i] * d2[j]));
    }
  }
  return defect;
}

double decomposition_residual(const Metric& G, const Splitting& s) {
  if (s.p_first.n() != G.op.n()) throw GridMismatch("splitting not on the metric grid");
  const LinOp t1 = compose(adjoint_l2(s.p_first), compose(G.op, s.p_first));
  const LinOp t2 = compose(adjoint_l2(s.p_second), compose(G.op, s.p_second));
  const Eigen::MatrixXd res = G.op.entries() - t1.entries() - t2.entries();
  return res.cwiseAbs().maxCoeff() / G.op.entries().cwiseAbs().maxCoeff();
}

double horizontality_residual(const Metric& G, const TangentField& h) {
  if (h.n() != G.op.n()) throw GridMismatch("field not on the metric grid");
  return horizontality_residual_op(G.op, h);
}

namespace {

struct Arc0Coefficients {
  Eigen::ArrayXd a, bt, b;
};

Arc0Coefficients arc0_coefficients(const DiscreteCurve& c, const TangentField& h) {
  Arc0Coefficients out;
  out.a = h.x * c.normal().x + h.y * c.normal().y;
  out.bt = h.x * c.tangent().x + h.y * c.tangent().y;
  out.b = solve_b(c, ScalarField(out.a)).values;
  return out;
}

}  // namespace

double oracle_closed_form_arc0(const DiscreteCurve& c, const TangentField& h,
                               const TangentField& k) {
  if (h.n() != c.n() || k.n() != c.n()) throw GridMismatch("field not on the curve grid");
  require_constant_speed(c);
  const Arc0Coefficients u = arc0_coefficients(c, h);
  const Arc0Coefficients z = arc0_coefficients(c, k);
  const Eigen::ArrayXd integrand =
      u.a * z.a + u.b * z.b + (u.bt - u.b) * (z.bt - z.b);
  return (integrand * c.ds_weights().values).sum();
}

double variant_closed_form_arc0(const DiscreteCurve& c, const TangentField& h,
                                const TangentField& k) {
  if (h.n() != c.n() || k.n() != c.n()) throw GridMismatch("field not on the curve grid");
  require_constant_speed(c);
  const Arc0Coefficients u = arc0_coefficients(c, h);
  const Arc0Coefficients z = arc0_coefficients(c, k);
  const Eigen::ArrayXd integrand =
      2.0 * u.a * z.a + u.bt * z.bt - u.b * z.bt - u.bt * z.b + u.b * z.b;
  return (integrand * c.ds_weights().values).sum();
}

double reparam_invariance_defect(const OperatorBuilder& builder, const DiscreteCurve& c,
                                 const Diffeo& phi, const TangentField& h,
                                 const TangentField& k) {
  auto base = std::make_shared<const DiscreteCurve>(c);
  const LinOp l1 = builder(base);
  const Eigen::VectorXd w1 = stacked_weights(*base);
  const double g1 = (l1.entries() * h.stacked()).dot(w1.cwiseProduct(k.stacked()));

  auto moved = std::make_shared<const DiscreteCurve>(apply_diffeo(c, phi));
  const TangentField h2 = apply_diffeo_field(h, phi, c);
  const TangentField k2 = apply_diffeo_field(k, phi, c);
  const LinOp l2 = builder(moved);
  const Eigen::VectorXd w2 = stacked_weights(*moved);
  const double g2 = (l2.entries() * h2.stacked()).dot(w2.cwiseProduct(k2.stacked()));

  return g1 != 0.0 ? std::abs(g2 - g1) / std::abs(g1) : std::abs(g2);
}

MetricReport verify_metric(const Metric& G, const Splitting& s, const MetricReportTolerances& tol,
                           std::uint32_t seed) {
  MetricReport rep;
  rep.orthogonality_defect = orthogonality_defect(G, s);
  rep.decomposition_residual = decomposition_residual(G, s);
  const SymmetryReport sym = is_symmetric_positive(G.op, tol.symmetry, seed);
  rep.symmetry_defect = sym.max_asymmetry;
  rep.min_rayleigh = sym.min_rayleigh;
  rep.pass = rep.orthogonality_defect < tol.orthogonality &&
             rep.decomposition_residual < tol.decomposition && sym.pass;
  return rep;
}

}  // namespace curvemetrics
