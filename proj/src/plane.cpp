#include "tiltwall/plane.hpp"

#include "tiltwall/errors.hpp"

namespace tiltwall {

PlaneLine PlaneLine::make(const Rational& A, const Rational& B, const Rational& C) {
  if (A == 0 && B == 0) throw Error(ErrorKind::InvalidArgument, "line with A = B = 0");
  Integer den = lcm_of(lcm_of(A.get_den(), B.get_den()), C.get_den());
  Integer a = A.get_num() * (den / A.get_den());
  Integer b = B.get_num() * (den / B.get_den());
  Integer c = C.get_num() * (den / C.get_den());
  Integer g = gcd_of(gcd_of(a, b), c);
  if (b < 0 || (b == 0 && a < 0)) g = -g;
  PlaneLine l;
  l.A_ = a / g;
  l.B_ = b / g;
  l.C_ = c / g;
  return l;
}

PlaneLine PlaneLine::through(const PlanePoint& p, const Rational& slope) {
  // w - p.w = slope*(b - p.b)
  return make(-slope, 1, p.w - slope * p.b);
}

Rational PlaneLine::slope() const {
  if (vertical()) throw Error(ErrorKind::VerticalLine, "vertical line " + str() + " has no slope");
  return rat(-A_, B_);
}

Rational PlaneLine::w_at(const Rational& b) const {
  if (vertical()) throw Error(ErrorKind::VerticalLine, "vertical line " + str());
  return (Rational(C_) - Rational(A_) * b) / Rational(B_);
}

QuadNum PlaneLine::w_at(const QuadNum& b) const {
  if (vertical()) throw Error(ErrorKind::VerticalLine, "vertical line " + str());
  return (QuadNum(Rational(C_)) - b * Rational(A_)) / Rational(B_);
}

bool PlaneLine::contains(const PlanePoint& p) const {
  return Rational(A_) * p.b + Rational(B_) * p.w == Rational(C_);
}

Integer PlaneLine::discriminant() const { return A_ * A_ + 2 * B_ * C_; }

std::string PlaneLine::str() const { return "[" + A_.get_str() + ", " + B_.get_str() + ", " + C_.get_str() + "]"; }

bool PlaneLine::operator<(const PlaneLine& o) const {
  if (A_ != o.A_) return A_ < o.A_;
  if (B_ != o.B_) return B_ < o.B_;
  return C_ < o.C_;
}

const char* name_of(Side s) {
  switch (s) {
    case Side::below: return "below";
    case Side::on: return "on";
    case Side::above: return "above";
  }
  return "?";
}

PlanePoint pi(const KClass& v) {
  if (v.r == 0) throw Error(ErrorKind::RankZero, "projection of a rank-zero class " + v.str());
  Rational r(v.r);
  return {v.c / r, v.s / r};
}

PlanePoint pi_prime(const KClass& v) {
  if (v.c == 0) throw Error(ErrorKind::ChOneZero, "pi_prime needs ch1 != 0, got " + v.str());
  return {2 * v.s / v.c, 3 * v.d / v.c};
}

PlaneLine line_through(const PlanePoint& p, const PlanePoint& q) {
  if (p == q) throw Error(ErrorKind::CoincidentPoints, "line through coincident points " + p.str());
  // (w_q - w_p) b - (b_q - b_p) w = (w_q - w_p) b_p - (b_q - b_p) w_p
  Rational A = q.w - p.w, B = -(q.b - p.b);
  return PlaneLine::make(A, B, A * p.b + B * p.w);
}

std::pair<QuadNum, QuadNum> parabola_roots(const PlaneLine& l) {
  if (l.vertical()) {
    Rational b = rat(l.C(), l.A());
    return {b, b};
  }
  Integer disc = l.discriminant();
  if (disc < 0) throw Error(ErrorKind::NoIntersection, "line " + l.str() + " misses the parabola");
  // (B/2) b^2 + A b - C = 0
  Rational B(l.B());
  QuadNum root = QuadNum::sqrt(Rational(disc));
  QuadNum base(Rational(-l.A()));
  return {(base - root) / B, (base + root) / B};
}

bool in_U(const PlanePoint& p) { return p.w > p.b * p.b / 2; }

Side point_side(const PlaneLine& l, const PlanePoint& p) {
  int c = cmp(p.w, l.w_at(p.b));
  return c > 0 ? Side::above : (c < 0 ? Side::below : Side::on);
}

Side side_at(const PlaneLine& l, const PlaneLine& m, const QuadNum& b) {
  int c = (l.w_at(b) - m.w_at(b)).sign();
  return c > 0 ? Side::above : (c < 0 ? Side::below : Side::on);
}

std::optional<Integer> segment_contains_integer_b(const PlaneLine& l) {
  auto [lo, hi] = parabola_roots(l);
  if (lo == hi) return std::nullopt;
  Integer k = lo.floor() + 1;
  if (QuadNum(Rational(k)) < hi) return k;
  return std::nullopt;
}

Rational simplest_rational_between(const QuadNum& lo, const QuadNum& hi, const Integer& max_den) {
  if (!(lo < hi)) throw Error(ErrorKind::NoIntersection, "empty interval (" + lo.str() + ", " + hi.str() + ")");
  for (Integer q = 1; q <= max_den; ++q) {
    Rational qq(q);
    Integer k = (lo * qq).floor() + 1;
    Rational x = rat(k, q);
    if (QuadNum(x) < hi) return x;
  }
  throw Error(ErrorKind::UnboundedSearch, "no rational with denominator <= " + max_den.get_str() + " in interval");
}

bool region_U_of(const KClass& w_n, const PlaneLine& lf, const PlanePoint& p) {
  PlanePoint base = pi(w_n);
  PlaneLine shifted = PlaneLine::through(base, lf.slope());
  return in_U(p) && p.b > base.b && point_side(shifted, p) != Side::below;
}

}  // namespace tiltwall
