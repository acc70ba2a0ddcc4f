#include "tiltwall/stability.hpp"

#include "tiltwall/errors.hpp"

namespace tiltwall {

Slope nu_unchecked(const Rational& b, const Rational& w, const KClass& v) {
  Rational r(v.r);
  Rational den = v.c - b * r;
  if (den == 0) return Slope::infinity();
  return {false, (v.s - w * r) / den};
}

Slope nu(const Rational& b, const Rational& w, const KClass& v, const ThreefoldModel&) {
  if (!in_U({b, w})) throw Error(ErrorKind::NotInU, "(" + to_string(b) + ", " + to_string(w) + ") is not in U");
  return nu_unchecked(b, w, v);
}

const char* name_of(Positivity p) {
  switch (p) {
    case Positivity::violates: return "violates";
    case Positivity::boundary: return "boundary";
    case Positivity::interior: return "interior";
  }
  return "?";
}

Positivity heart_positivity(const Rational& b, const KClass& v, const ThreefoldModel&) {
  int s = sgn(v.c - b * Rational(v.r));
  return s > 0 ? Positivity::interior : (s == 0 ? Positivity::boundary : Positivity::violates);
}

Rational bg_form(const Rational& b, const Rational& w, const KClass& v, const ThreefoldModel& X) {
  KClass t = ch_b(v, b);
  Rational h3(X.h3);
  Rational h6 = h3 * h3;
  Rational ch1 = t.c * h3, ch2 = t.s * h3, ch3 = t.d * h3;
  return (2 * w - b * b) * delta(v, X) + 4 * ch2 * ch2 - 6 * ch1 * ch3;
}

Rational bg_form_linear(const Rational& b, const Rational& w, const KClass& v, const ThreefoldModel& X) {
  Rational h3(X.h3);
  Rational C0 = Rational(v.r) * h3, C1 = v.c * h3, C2 = v.s * h3, C3 = v.d * h3;
  return (C1 * C1 - 2 * C0 * C2) * w + (3 * C0 * C3 - C1 * C2) * b + (2 * C2 * C2 - 3 * C1 * C3);
}

PlaneLine bg_line(const KClass& v, const ThreefoldModel& X) {
  if (delta(v, X) == 0) throw Error(ErrorKind::DegenerateBG, "Delta_H vanishes for " + v.str());
  Rational r(v.r);
  return PlaneLine::make(3 * r * v.d - v.c * v.s, v.c * v.c - 2 * r * v.s, 3 * v.c * v.d - 2 * v.s * v.s);
}

std::pair<QuadNum, QuadNum> lf_roots(const KClass& v_n0, const ThreefoldModel& X) {
  return parabola_roots(bg_line(v_n0, X));
}

bool li_region(const Rational& b, const Rational& w) {
  Rational f(floor_of(b));
  return w > b * b / 2 + (b - f) * (f + 1 - b) / 2;
}

}  // namespace tiltwall
