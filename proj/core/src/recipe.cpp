#include "curvemetrics/recipe.hpp"

#include <cctype>
#include <cstdio>

namespace curvemetrics {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in recipe at position " +
                                  std::to_string(pos));
  }
  std::string ident() {
    skip_ws();
    const size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '+' ||
            s[pos] == '^' || s[pos] == '.'))
      ++pos;
    if (pos == start) throw ParseError("expected a name in recipe at position " +
                                       std::to_string(pos));
    return s.substr(start, pos - start);
  }
  double number() {
    skip_ws();
    size_t end = pos;
    while (end < s.size() && s[end] != ',' && s[end] != ']' && s[end] != ')') ++end;
    const std::string tok = s.substr(pos, end - pos);
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("expected a number in recipe at position " + std::to_string(pos));
    }
    for (size_t i = used; i < tok.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(tok[i])))
        throw ParseError("trailing characters in recipe number");
    pos = end;
    return v;
  }
};

Recipe parse_at(Cursor& c);

Recipe parse_sobolev(Cursor& c) {
  Recipe r;
  r.kind = Recipe::Kind::Sobolev;
  c.expect('(');
  const double lval = c.number();
  const int l = static_cast<int>(lval);
  if (static_cast<double>(l) != lval) throw InvalidCoefficients("sobolev order must be an integer");
  if (l < 0) throw InvalidCoefficients("sobolev order must be nonnegative");
  r.order = l;
  c.expect(',');
  c.expect('[');
  while (true) {
    r.coeffs.push_back(c.number());
    if (c.eat(']')) break;
    c.expect(',');
  }
  c.expect(')');
  if (static_cast<int>(r.coeffs.size()) != l + 1)
    throw InvalidCoefficients("sobolev needs l+1 coefficients");
  if (!(r.coeffs[0] > 0.0))
    throw InvalidCoefficients("zeroth sobolev coefficient must be positive");
  for (double v : r.coeffs)
    if (!(v >= 0.0)) throw InvalidCoefficients("sobolev coefficients must be nonnegative");
  return r;
}

Recipe parse_at(Cursor& c) {
  const std::string name = c.ident();
  if (name == "l2") {
    Recipe r;
    r.kind = Recipe::Kind::L2;
    return r;
  }
  if (name == "sobolev") return parse_sobolev(c);
  if (name == "almost_local") {
    Recipe r;
    r.kind = Recipe::Kind::AlmostLocal;
    c.expect('(');
    r.phi_tag = c.ident();
    c.expect(')');
    if (r.phi_tag != "1+kappa^2")
      throw ParseError("unknown almost_local coefficient tag '" + r.phi_tag + "'");
    return r;
  }
  if (name == "prescribed") {
    Recipe r;
    r.kind = Recipe::Kind::Prescribed;
    c.expect('(');
    r.splitting_tag = c.ident();
    if (r.splitting_tag != "tan_nor" && r.splitting_tag != "arc0")
      throw ParseError("unknown splitting tag '" + r.splitting_tag + "'");
    c.expect(',');
    r.inner = std::make_shared<Recipe>(parse_at(c));
    c.expect(')');
    return r;
  }
  throw ParseError("unknown recipe kind '" + name + "'");
}

std::string num12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Recipe parse_recipe(const std::string& text) {
  Cursor c{text};
  Recipe r = parse_at(c);
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError("trailing characters after recipe");
  return r;
}

std::string recipe_to_string(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::L2:
      return "l2";
    case Recipe::Kind::Sobolev: {
      std::string out = "sobolev(" + std::to_string(r.order) + ",[";
      for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i) out += ",";
        out += num12(r.coeffs[i]);
      }
      return out + "])";
    }
    case Recipe::Kind::AlmostLocal:
      return "almost_local(" + r.phi_tag + ")";
    case Recipe::Kind::Prescribed:
      return "prescribed(" + r.splitting_tag + "," + recipe_to_string(*r.inner) + ")";
  }
  throw ParseError("corrupt recipe");
}

bool recipe_needs_constant_speed(const Recipe& r) {
  if (r.kind != Recipe::Kind::Prescribed) return false;
  return r.splitting_tag == "arc0" || recipe_needs_constant_speed(*r.inner);
}

Splitting build_splitting(const std::string& tag, std::shared_ptr<const DiscreteCurve> curve) {
  if (tag == "tan_nor") return tan_nor_splitting(std::move(curve));
  if (tag == "arc0") return arc0_splitting(std::move(curve));
  throw ParseError("unknown splitting tag '" + tag + "'");
}

LinOp build_operator(const Recipe& r, std::shared_ptr<const DiscreteCurve> curve) {
  switch (r.kind) {
    case Recipe::Kind::L2:
      return LinOp::identity(std::move(curve));
    case Recipe::Kind::Sobolev:
      return sobolev_operator(std::move(curve), r.order, r.coeffs);
    case Recipe::Kind::AlmostLocal: {
      ScalarField phi(1.0 + curve->curvature().values.square());
      return almost_local_operator(std::move(curve), phi);
    }
    case Recipe::Kind::Prescribed: {
      const Splitting s = build_splitting(r.splitting_tag, curve);
      const LinOp inner = build_operator(*r.inner, curve);
      return prescribed_splitting_metric(std::move(curve), s, inner).op;
    }
  }
  throw ParseError("corrupt recipe");
}

OperatorBuilder recipe_builder(const Recipe& r) {
  return [r](std::shared_ptr<const DiscreteCurve> curve) { return build_operator(r, curve); };
}

}  // namespace curvemetrics
