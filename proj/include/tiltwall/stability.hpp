#pragma once

#include <utility>

#include "tiltwall/plane.hpp"

namespace tiltwall {

struct Slope {
  bool infinite = false;
  Rational value = 0;

  static Slope infinity() { return {true, 0}; }
  bool operator==(const Slope& o) const { return infinite == o.infinite && (infinite || value == o.value); }
  bool operator<(const Slope& o) const { return !infinite && (o.infinite || value < o.value); }
  std::string str() const { return infinite ? "+inf" : to_string(value); }
};

// Slope without the w > b^2/2 precondition; used on wall lines whose points are known to lie in U.
Slope nu_unchecked(const Rational& b, const Rational& w, const KClass& v);
Slope nu(const Rational& b, const Rational& w, const KClass& v, const ThreefoldModel& X);

enum class Positivity { violates, boundary, interior };
const char* name_of(Positivity p);
Positivity heart_positivity(const Rational& b, const KClass& v, const ThreefoldModel& X);

// The quadratic form (2w - b^2)Delta + 4(ch2^b.H)^2 - 6(ch1^b.H^2)ch3^b.
Rational bg_form(const Rational& b, const Rational& w, const KClass& v, const ThreefoldModel& X);
// Half of bg_form, evaluated from its expansion as a linear function of (b, w).
Rational bg_form_linear(const Rational& b, const Rational& w, const KClass& v, const ThreefoldModel& X);
PlaneLine bg_line(const KClass& v, const ThreefoldModel& X);
std::pair<QuadNum, QuadNum> lf_roots(const KClass& v_n0, const ThreefoldModel& X);

bool li_region(const Rational& b, const Rational& w);

}  // namespace tiltwall
