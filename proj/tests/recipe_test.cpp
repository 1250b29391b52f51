#include <gtest/gtest.h>

#include "curvemetrics/recipe.hpp"
#include "testutil.hpp"

using namespace curvemetrics;
using cmtest::circle;
using cmtest::ellipse;
using cmtest::shared;

TEST(ParseRecipe, AcceptsTheFullGrammar) {
  EXPECT_EQ(parse_recipe("l2").kind, Recipe::Kind::L2);

  const Recipe s = parse_recipe("sobolev(2,[1,0.5,0.25])");
  EXPECT_EQ(s.kind, Recipe::Kind::Sobolev);
  EXPECT_EQ(s.order, 2);
  ASSERT_EQ(s.coeffs.size(), 3u);
  EXPECT_EQ(s.coeffs[1], 0.5);

  const Recipe a = parse_recipe("almost_local(1+kappa^2)");
  EXPECT_EQ(a.kind, Recipe::Kind::AlmostLocal);
  EXPECT_EQ(a.phi_tag, "1+kappa^2");

  const Recipe p = parse_recipe("prescribed(arc0,l2)");
  EXPECT_EQ(p.kind, Recipe::Kind::Prescribed);
  EXPECT_EQ(p.splitting_tag, "arc0");
  ASSERT_TRUE(p.inner);
  EXPECT_EQ(p.inner->kind, Recipe::Kind::L2);

  const Recipe nested = parse_recipe("prescribed(tan_nor, sobolev(1, [1, 1]))");
  EXPECT_EQ(nested.splitting_tag, "tan_nor");
  EXPECT_EQ(nested.inner->kind, Recipe::Kind::Sobolev);
}

TEST(ParseRecipe, WhitespaceIsInsignificant) {
  const Recipe r = parse_recipe("  sobolev( 1 , [ 1 , 2 ] )  ");
  EXPECT_EQ(r.order, 1);
  EXPECT_EQ(r.coeffs[1], 2.0);
}

TEST(ParseRecipe, RejectsMalformedStrings) {
  EXPECT_THROW(parse_recipe(""), ParseError);
  EXPECT_THROW(parse_recipe("l3"), ParseError);
  EXPECT_THROW(parse_recipe("l2 trailing"), ParseError);
  EXPECT_THROW(parse_recipe("sobolev(1,[1,1)"), ParseError);
  EXPECT_THROW(parse_recipe("sobolev(1 [1,1])"), ParseError);
  EXPECT_THROW(parse_recipe("almost_local(kappa)"), ParseError);
  EXPECT_THROW(parse_recipe("prescribed(diagonal,l2)"), ParseError);
  EXPECT_THROW(parse_recipe("prescribed(arc0)"), ParseError);
}

TEST(ParseRecipe, RejectsBadSobolevParameters) {
  EXPECT_THROW(parse_recipe("sobolev(-1,[1])"), InvalidCoefficients);
  EXPECT_THROW(parse_recipe("sobolev(1.5,[1,1])"), InvalidCoefficients);
  EXPECT_THROW(parse_recipe("sobolev(1,[1])"), InvalidCoefficients);
  EXPECT_THROW(parse_recipe("sobolev(1,[1,1,1])"), InvalidCoefficients);
  EXPECT_THROW(parse_recipe("sobolev(1,[0,1])"), InvalidCoefficients);
  EXPECT_THROW(parse_recipe("sobolev(1,[1,-2])"), InvalidCoefficients);
}

TEST(RecipeToString, RoundTripsThroughTheParser) {
  for (const char* text :
       {"l2", "sobolev(1,[1,1])", "sobolev(2,[1,0.5,0.25])", "almost_local(1+kappa^2)",
        "prescribed(arc0,l2)", "prescribed(tan_nor,sobolev(1,[1,1]))",
        "prescribed(arc0,prescribed(tan_nor,l2))"}) {
    const Recipe r = parse_recipe(text);
    const std::string canon = recipe_to_string(r);
    EXPECT_EQ(canon, text);
    EXPECT_EQ(recipe_to_string(parse_recipe(canon)), canon);
  }
}

TEST(RecipeNeedsConstantSpeed, OnlyWhenArc0Appears) {
  EXPECT_FALSE(recipe_needs_constant_speed(parse_recipe("l2")));
  EXPECT_FALSE(recipe_needs_constant_speed(parse_recipe("sobolev(1,[1,1])")));
  EXPECT_FALSE(recipe_needs_constant_speed(parse_recipe("prescribed(tan_nor,l2)")));
  EXPECT_TRUE(recipe_needs_constant_speed(parse_recipe("prescribed(arc0,l2)")));
  EXPECT_TRUE(
      recipe_needs_constant_speed(parse_recipe("prescribed(tan_nor,prescribed(arc0,l2))")));
}

TEST(BuildOperator, MatchesDirectConstructions) {
  auto c = shared(circle(1.0, 128));

  const LinOp l2 = build_operator(parse_recipe("l2"), c);
  EXPECT_LT((l2.entries() - Eigen::MatrixXd::Identity(256, 256)).cwiseAbs().maxCoeff(), 1e-15);

  const LinOp sob = build_operator(parse_recipe("sobolev(1,[1,1])"), c);
  const LinOp sob_ref = sobolev_operator(c, 1, {1.0, 1.0});
  EXPECT_LT((sob.entries() - sob_ref.entries()).cwiseAbs().maxCoeff(), 1e-14);

  const LinOp al = build_operator(parse_recipe("almost_local(1+kappa^2)"), c);
  ScalarField phi(1.0 + c->curvature().values.square());
  const LinOp al_ref = almost_local_operator(c, phi);
  EXPECT_LT((al.entries() - al_ref.entries()).cwiseAbs().maxCoeff(), 1e-14);

  const LinOp pre = build_operator(parse_recipe("prescribed(tan_nor,l2)"), c);
  const Metric pre_ref = prescribed_splitting_metric(c, tan_nor_splitting(c), LinOp::identity(c));
  EXPECT_LT((pre.entries() - pre_ref.op.entries()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BuildOperator, Arc0RecipeEnforcesConstantSpeed) {
  auto raw = shared(ellipse(2.0, 1.0, 128));
  EXPECT_THROW(build_operator(parse_recipe("prescribed(arc0,l2)"), raw), NotConstantSpeed);
  auto resampled = shared(reparametrize_constant_speed(*raw));
  EXPECT_NO_THROW(build_operator(parse_recipe("prescribed(arc0,l2)"), resampled));
}

TEST(RecipeBuilder, ClosureIsReusableAcrossCurves) {
  const OperatorBuilder b = recipe_builder(parse_recipe("sobolev(1,[1,1])"));
  auto c1 = shared(circle(1.0, 64));
  auto c2 = shared(ellipse(2.0, 1.0, 128));
  EXPECT_EQ(b(c1).n(), 64);
  EXPECT_EQ(b(c2).n(), 128);
}

TEST(BuildSplitting, TagsMapToTheTwoSplittings) {
  auto c = shared(circle(1.0, 64));
  EXPECT_EQ(build_splitting("tan_nor", c).label_second, "Nor");
  EXPECT_EQ(build_splitting("arc0", c).label_second, "Arc0");
  EXPECT_THROW(build_splitting("polar", c), ParseError);
}
