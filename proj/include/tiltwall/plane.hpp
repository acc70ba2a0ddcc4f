#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tiltwall/quadnum.hpp"
#include "tiltwall/threefold.hpp"

namespace tiltwall {

struct PlanePoint {
  Rational b, w;
  bool operator==(const PlanePoint& o) const { return b == o.b && w == o.w; }
  std::string str() const { return "(" + to_string(b) + ", " + to_string(w) + ")"; }
};

// The line A*b + B*w = C with primitive integer coefficients, B > 0 or (B = 0 and A > 0).
class PlaneLine {
 public:
  PlaneLine() = default;
  static PlaneLine make(const Rational& A, const Rational& B, const Rational& C);
  static PlaneLine through(const PlanePoint& p, const Rational& slope);

  const Integer& A() const { return A_; }
  const Integer& B() const { return B_; }
  const Integer& C() const { return C_; }
  bool vertical() const { return B_ == 0; }
  Rational slope() const;
  Rational w_at(const Rational& b) const;
  QuadNum w_at(const QuadNum& b) const;
  bool contains(const PlanePoint& p) const;
  // A^2 + 2BC, the discriminant of the intersection with w = b^2/2.
  Integer discriminant() const;
  std::string str() const;

  bool operator==(const PlaneLine& o) const { return A_ == o.A_ && B_ == o.B_ && C_ == o.C_; }
  bool operator!=(const PlaneLine& o) const { return !(*this == o); }
  bool operator<(const PlaneLine& o) const;

 private:
  Integer A_ = 0, B_ = 1, C_ = 0;
};

enum class Side { below, on, above };
const char* name_of(Side s);

PlanePoint pi(const KClass& v);
PlanePoint pi_prime(const KClass& v);
PlaneLine line_through(const PlanePoint& p, const PlanePoint& q);
std::pair<QuadNum, QuadNum> parabola_roots(const PlaneLine& l);
bool in_U(const PlanePoint& p);
Side point_side(const PlaneLine& l, const PlanePoint& p);
// Sign of w_l(b) - w_m(b) as a Side of l relative to m.
Side side_at(const PlaneLine& l, const PlaneLine& m, const QuadNum& b);
std::optional<Integer> segment_contains_integer_b(const PlaneLine& l);
// Smallest integer in (lo, hi) when there is one, else the rational with least denominator (then least value).
Rational simplest_rational_between(const QuadNum& lo, const QuadNum& hi, const Integer& max_den = 1000000);
bool region_U_of(const KClass& w_n, const PlaneLine& lf, const PlanePoint& p);

}  // namespace tiltwall
