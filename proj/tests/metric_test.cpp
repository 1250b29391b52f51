#include <gtest/gtest.h>

#include <cmath>

#include "curvemetrics/metric.hpp"
#include "curvemetrics/rng.hpp"
#include "testutil.hpp"

using namespace curvemetrics;
using cmtest::circle;
using cmtest::ellipse;
using cmtest::shared;

namespace {

TangentField random_field(Eigen::Index n, std::uint32_t seed) {
  RandomStream stream(seed);
  return random_tangent_field(n, stream, 4);
}

LinOp sobolev1(std::shared_ptr<const DiscreteCurve> c) {
  return sobolev_operator(std::move(c), 1, {1.0, 1.0});
}

LinOp curvature_weight(std::shared_ptr<const DiscreteCurve> c) {
  ScalarField phi = ScalarField::Constant(c->n(), 1.0);
  phi.values += c->curvature().values.square();
  return almost_local_operator(std::move(c), phi);
}

}  // namespace

TEST(MetricFromOperator, AcceptsSymmetricPositiveRejectsOthers) {
  auto c = shared(ellipse(2.0, 1.0, 96));
  EXPECT_NO_THROW(metric_from_operator(c, sobolev1(c)));
  EXPECT_THROW(metric_from_operator(c, arc_derivative_operator(c)), NotSymmetricPositive);
  EXPECT_THROW(metric_from_operator(c, scale(LinOp::identity(c), -1.0)), NotSymmetricPositive);
  const Metric g = metric_from_operator(c, LinOp::identity(c));
  EXPECT_EQ(g.provenance, "direct");
}

TEST(Eval, FlatMetricIsArcLengthPairing) {
  const Eigen::Index n = 256;
  auto c = shared(circle(1.0, n));
  const Metric g = metric_from_operator(c, LinOp::identity(c));
  // <n, n> integrates the volume form: frozen discrete circumference
  EXPECT_NEAR(eval(g, c->normal(), c->normal()), 6.282554501865546, 1e-9);
  EXPECT_NEAR(eval(g, c->normal(), c->normal()), kTwoPi, 1e-3);
  // frame fields are pointwise orthogonal
  EXPECT_NEAR(eval(g, c->normal(), c->tangent()), 0.0, 1e-13);
  EXPECT_THROW(eval(g, random_field(128, 1), random_field(128, 2)), GridMismatch);
}

TEST(Eval, SymmetricBilinear) {
  auto c = shared(ellipse(2.0, 1.0, 128));
  const Metric g = metric_from_operator(c, sobolev1(c));
  const TangentField h = random_field(128, 3);
  const TangentField k = random_field(128, 4);
  const double ghk = eval(g, h, k);
  EXPECT_NEAR(ghk, eval(g, k, h), 1e-11 * (1.0 + std::abs(ghk)));
  const double combined = eval(g, h + k, h + k);
  const double expanded = eval(g, h, h) + 2.0 * ghk + eval(g, k, k);
  EXPECT_NEAR(combined, expanded, 1e-10 * (1.0 + std::abs(combined)));
  EXPECT_GT(eval(g, h, h), 0.0);
}

TEST(Prescribed, OperatorIsSymmetricPositiveAndLabeled) {
  auto c = shared(circle(1.0, 128));
  const Splitting s = arc0_splitting(c);
  const Metric g = prescribed_splitting_metric(c, s, LinOp::identity(c));
  EXPECT_EQ(g.provenance, "prescribed(Tan/Arc0)");
  const SymmetryReport rep = is_symmetric_positive(g.op, 1e-10);
  EXPECT_TRUE(rep.pass);
  EXPECT_THROW(prescribed_splitting_metric(c, s, arc_derivative_operator(c)),
               NotSymmetricPositive);
}

TEST(Prescribed, MakesTheSplittingOrthogonal) {
  // construction direction of the equivalence: prescribed metrics are exactly
  // block diagonal over their splitting
  const Eigen::Index n = 256;
  for (bool use_arc0 : {false, true}) {
    auto c = shared(circle(1.0, n));
    const Splitting s = use_arc0 ? arc0_splitting(c) : tan_nor_splitting(c);
    for (int which = 0; which < 2; ++which) {
      const LinOp inner = which == 0 ? sobolev1(c) : curvature_weight(c);
      const Metric g = prescribed_splitting_metric(c, s, inner);
      EXPECT_LT(orthogonality_defect(g, s), 1e-10);
      EXPECT_LT(decomposition_residual(g, s), 1e-8);
    }
  }
}

TEST(Orthogonality, FrozenFlatVsArc0Defect) {
  // the flat metric does not see the arc0 splitting as orthogonal; value
  // frozen from the oracle at n = 256
  const Eigen::Index n = 256;
  auto c = shared(circle(1.0, n));
  const Metric g = metric_from_operator(c, LinOp::identity(c));
  const Splitting s = arc0_splitting(c);
  EXPECT_NEAR(orthogonality_defect(g, s), 0.218245, 1e-3);
}

TEST(Orthogonality, FlatMetricSeesTanNorAsOrthogonal) {
  auto c = shared(ellipse(2.0, 1.0, 128));
  const Metric g = metric_from_operator(c, LinOp::identity(c));
  EXPECT_LT(orthogonality_defect(g, tan_nor_splitting(c)), 1e-12);
}

TEST(Decomposition, FrozenSobolevVsTanNor) {
  // a first order metric mixes tangential and normal parts through D_s; the
  // max-abs-entry normalized residual is frozen from the oracle at n = 256
  const Eigen::Index n = 256;
  auto c = shared(circle(1.0, n));
  const Metric g = metric_from_operator(c, sobolev1(c));
  const double res = decomposition_residual(g, tan_nor_splitting(c));
  EXPECT_NEAR(res, 0.0244748041, 1e-6);
  EXPECT_GT(res, 1e-2);
  EXPECT_LT(res, 1e-1);
}

TEST(Decomposition, PointwiseWeightsDecomposeOverTanNor) {
  // multiplication operators commute with pointwise projections, so the
  // curvature weighted metric is block diagonal over tan/nor to roundoff
  auto c = shared(circle(1.0, 256));
  const Metric g = metric_from_operator(c, curvature_weight(c));
  EXPECT_LT(decomposition_residual(g, tan_nor_splitting(c)), 1e-12);
  EXPECT_LT(orthogonality_defect(g, tan_nor_splitting(c)), 1e-10);
}

TEST(Horizontality, FlatMetricFrameCases) {
  auto c = shared(circle(1.0, 256));
  const Metric g = metric_from_operator(c, LinOp::identity(c));
  EXPECT_NEAR(horizontality_residual(g, c->normal()), 0.0, 1e-12);
  EXPECT_NEAR(horizontality_residual(g, c->tangent()), 1.0, 1e-12);
  EXPECT_NEAR(horizontality_residual(g, TangentField::Zero(256)), 0.0, 1e-15);
}

TEST(Horizontality, PrescribedTanNorKeepsNormalFieldsNearHorizontal) {
  const Eigen::Index n = 256;
  auto c = shared(circle(1.0, n));
  const Splitting s = tan_nor_splitting(c);
  const Metric g = prescribed_splitting_metric(c, s, sobolev1(c));
  const TangentField h = apply(s.p_second, random_field(n, 12));
  EXPECT_LT(horizontality_residual(g, h), 5e-2);
}

TEST(Horizontality, PrescribedTanNorIsExactlyHorizontalOnNormalFields) {
  // L h = P_nor L~ h for h normal and P_nor projects pointwise onto n, so
  // <L h, v> vanishes to roundoff at every resolution (no FD limit at all)
  for (const Eigen::Index n : {Eigen::Index(128), Eigen::Index(256)}) {
    auto c = shared(circle(1.0, n));
    const Splitting s = tan_nor_splitting(c);
    const Metric g = prescribed_splitting_metric(c, s, sobolev1(c));
    const Eigen::ArrayXd th = theta_grid(n);
    const TangentField h((3.0 * th).cos() * c->normal().x, (3.0 * th).cos() * c->normal().y);
    EXPECT_LT(horizontality_residual(g, h), 1e-10);
  }
}

TEST(ClosedForm, CircleFrameValues) {
  // n = 512 keeps the quadrature error of the doubled value under the stated
  // 1e-3 absolute window
  const Eigen::Index n = 512;
  const DiscreteCurve c = circle(1.0, n);
  // h = k = n: a = 1, b = 0, tangential part 0
  EXPECT_NEAR(oracle_closed_form_arc0(c, c.normal(), c.normal()), kTwoPi, 1e-3);
  EXPECT_NEAR(variant_closed_form_arc0(c, c.normal(), c.normal()), 2.0 * kTwoPi, 1e-3);
  // h = k = v: a = 0, b = 0, both reduce to the arc length integral
  EXPECT_NEAR(oracle_closed_form_arc0(c, c.tangent(), c.tangent()), kTwoPi, 1e-3);
  EXPECT_NEAR(variant_closed_form_arc0(c, c.tangent(), c.tangent()), kTwoPi, 1e-3);
}

TEST(ClosedForm, OracleMatchesOperatorMetric) {
  const Eigen::Index n = 256;
  auto c = shared(circle(1.0, n));
  const Splitting s = arc0_splitting(c);
  const Metric g = prescribed_splitting_metric(c, s, LinOp::identity(c));
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    const TangentField h = random_field(n, seed);
    const TangentField k = random_field(n, seed + 1000);
    const double direct = eval(g, h, k);
    const double closed = oracle_closed_form_arc0(*c, h, k);
    EXPECT_NEAR(direct, closed, 1e-8 * (1.0 + std::abs(direct))) << "seed " << seed;
  }
}

TEST(ClosedForm, VariantDiffersWheneverNormalPartIsPresent) {
  const Eigen::Index n = 256;
  const DiscreteCurve c = circle(1.0, n);
  const TangentField h = random_field(n, 77);
  const double oracle = oracle_closed_form_arc0(c, h, h);
  const double variant = variant_closed_form_arc0(c, h, h);
  EXPECT_GT(std::abs(variant - oracle), 1e-3 * std::abs(oracle));
}

TEST(ClosedForm, RequiresConstantSpeed) {
  const DiscreteCurve c = ellipse(2.0, 1.0, 128);
  const TangentField h = random_field(128, 1);
  EXPECT_THROW(oracle_closed_form_arc0(c, h, h), NotConstantSpeed);
  EXPECT_THROW(variant_closed_form_arc0(c, h, h), NotConstantSpeed);
}

TEST(ReparamInvariance, GridShiftIsExact) {
  const Eigen::Index n = 256;
  const DiscreteCurve c = ellipse(2.0, 1.0, n);
  const Diffeo phi = grid_shift_diffeo(n, 37);
  const TangentField h = random_field(n, 5);
  const TangentField k = random_field(n, 6);

  const OperatorBuilder l2 = [](std::shared_ptr<const DiscreteCurve> cc) {
    return LinOp::identity(std::move(cc));
  };
  EXPECT_LT(reparam_invariance_defect(l2, c, phi, h, k), 1e-12);
  EXPECT_LT(reparam_invariance_defect(sobolev1, c, phi, h, k), 1e-12);
  EXPECT_LT(reparam_invariance_defect(curvature_weight, c, phi, h, k), 1e-12);
}

TEST(ReparamInvariance, SmoothDiffeoDefectSmallAndConverging) {
  double at256 = 0.0;
  for (const Eigen::Index n : {Eigen::Index(256), Eigen::Index(512)}) {
    const DiscreteCurve c = circle(1.0, n);
    const Eigen::ArrayXd th = theta_grid(n);
    const Diffeo phi = make_diffeo(th + 0.3 * th.sin());
    // overlapping harmonics keep the reference pairing O(1): a relative
    // defect against a pairing that vanishes by symmetry means nothing
    const TangentField h(th.cos() + 0.2 * (2.0 * th).sin(), 0.5 * th.sin());
    const TangentField k(1.0 + 0.3 * th.cos(), 0.4 + 0.1 * th.sin());

    const OperatorBuilder l2 = [](std::shared_ptr<const DiscreteCurve> cc) {
      return LinOp::identity(std::move(cc));
    };
    const double defect = reparam_invariance_defect(l2, c, phi, h, k);
    const double defect_al = reparam_invariance_defect(curvature_weight, c, phi, h, k);
    if (n == 256) {
      at256 = defect;
      EXPECT_LT(defect, 1e-2);
      EXPECT_LT(defect_al, 1e-2);
    } else {
      EXPECT_LT(defect, 2.5e-3);
      EXPECT_LT(defect, 0.5 * at256);
    }
  }
}

TEST(VerifyMetric, PassAndFailReports) {
  const Eigen::Index n = 256;
  auto c = shared(circle(1.0, n));
  const Splitting tn = tan_nor_splitting(c);
  const Splitting a0 = arc0_splitting(c);
  const MetricReportTolerances tol;

  const Metric good = prescribed_splitting_metric(c, tn, sobolev1(c));
  const MetricReport ok = verify_metric(good, tn, tol);
  EXPECT_TRUE(ok.pass);
  EXPECT_LT(ok.orthogonality_defect, 1e-10);
  EXPECT_LT(ok.decomposition_residual, 1e-8);
  EXPECT_LT(ok.symmetry_defect, 1e-10);
  EXPECT_GT(ok.min_rayleigh, 0.0);

  const Metric flat = metric_from_operator(c, LinOp::identity(c));
  const MetricReport bad = verify_metric(flat, a0, tol);
  EXPECT_FALSE(bad.pass);
  EXPECT_GT(bad.orthogonality_defect, 1e-1);
}
