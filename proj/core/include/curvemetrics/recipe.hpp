#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvemetrics/metric.hpp"

namespace curvemetrics {

// Operator recipe grammar:
//   l2
//   sobolev(l, [c0, c1, ...])
//   almost_local(1+kappa^2)
//   prescribed(tan_nor | arc0, <recipe>)
struct Recipe {
  enum class Kind { L2, Sobolev, AlmostLocal, Prescribed };

  Kind kind = Kind::L2;
  int order = 0;                  // sobolev
  std::vector<double> coeffs;     // sobolev
  std::string phi_tag;            // almost_local
  std::string splitting_tag;      // prescribed: "tan_nor" or "arc0"
  std::shared_ptr<Recipe> inner;  // prescribed
};

// Throws ParseError on malformed strings and InvalidCoefficients on bad
// sobolev parameters.
Recipe parse_recipe(const std::string& text);

std::string recipe_to_string(const Recipe& r);

// True if building this recipe requires a constant speed curve (an arc0
// splitting appears somewhere).
bool recipe_needs_constant_speed(const Recipe& r);

// Builds the inertia operator at the given curve.
LinOp build_operator(const Recipe& r, std::shared_ptr<const DiscreteCurve> curve);

// Convenience wrapper: a builder closure for path energy and invariance
// checks.
OperatorBuilder recipe_builder(const Recipe& r);

// Splitting tag helper shared with the CLI ("tan_nor" or "arc0").
Splitting build_splitting(const std::string& tag, std::shared_ptr<const DiscreteCurve> curve);

}  // namespace curvemetrics
