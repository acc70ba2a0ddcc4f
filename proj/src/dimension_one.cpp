#include "tiltwall/dimension_one.hpp"

#include <map>
#include <stdexcept>

#include "tiltwall/errors.hpp"

namespace tiltwall {

void ClTriple::validate() const {
  if (r < 0 || c < 0 || (r == 0 && c == 0 && s < 0))
    throw Error(ErrorKind::InvalidTriple, "(" + r.get_str() + ", " + c.get_str() + ", " + s.get_str() + ") is not an object class");
}

Ch3Bound constant_bound(const Rational& value) {
  return [value](const Integer&, const Integer&) { return value; };
}

Slope nu_theta(const Rational& theta, const ClTriple& t) {
  t.validate();
  if (t.r != 0) return {false, theta};
  if (t.c != 0) return {false, rat(t.s, t.c)};
  return Slope::infinity();
}

Rational theta_js(const Integer& c, const Integer& s) {
  if (c <= 0) throw Error(ErrorKind::NonPositiveC, "theta_js needs c > 0");
  return rat(s, c);
}

std::vector<Dim1Wall> dim1_walls(const Integer& c, const Integer& s, const Ch3Bound& bound, const Integer& n) {
  Rational js = theta_js(c, s);
  Rational floor_term = js > 0 ? js : Rational(0);
  std::map<Rational, std::vector<std::pair<Integer, Integer>>, RationalLess> found;
  for (Integer c0 = 1; c0 < c; ++c0) {
    Integer lo = floor_of(Rational(c0) * js) + 1;
    Integer hi = floor_of(Rational(s) - floor_term - bound(n, c - c0));
    for (Integer s0 = lo; s0 <= hi; ++s0) {
      Rational theta = rat(s0, c0);
      if (!(rat(s - s0, c - c0) < js && js < theta)) throw std::logic_error("seesaw ordering violated");
      found[theta].push_back({c0, s0});
    }
  }
  std::vector<Dim1Wall> out{{js, {}}};
  for (auto& [theta, w] : found) out.push_back({theta, w});
  return out;
}

ChamberReport chamber_report(const Integer& c, const Integer& s, const Integer& n, const Ch3Bound& bound) {
  ChamberReport rep;
  rep.theta_js = theta_js(c, s);
  rep.empty_chamber = {rep.theta_js - 1, rep.theta_js};
  auto walls = dim1_walls(c, s, bound, n);
  rep.walls.assign(walls.begin() + 1, walls.end());
  return rep;
}

Relation easy_js_relation(const Integer& beta_h, const Integer& m, const Integer& n, const ThreefoldModel& X) {
  if (beta_h <= 0) throw Error(ErrorKind::InvalidArgument, "easy_js_relation needs beta_h > 0");
  Integer chi = m + n * beta_h;
  Rational h(X.h3);
  Relation rel;
  rel.left = InvariantSymbol::PT(Rational(beta_h), Rational(chi));
  KClass v{0, 0, Rational(beta_h) / h, Rational(m) / h};
  rel.right.push_back(make_term(signed_euler(Rational(chi)), {InvariantSymbol::J_gieseker(v)}));
  rel.provenance.push_back("stable pairs with minimal curve class are Joyce-Song pairs");
  rel.normalize();
  return rel;
}

}  // namespace tiltwall
