#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tiltwall/stability.hpp"
#include "tiltwall/symbols.hpp"

namespace tiltwall {

// (rank, ch2.H, ch3) of an object of the pair category.
struct ClTriple {
  Integer r, c, s;
  void validate() const;
};

// Lower bound L(n, c_budget) for ch3 of quotients of O(-n) with ch2.H <= c_budget.
using Ch3Bound = std::function<Rational(const Integer& n, const Integer& c_budget)>;
Ch3Bound constant_bound(const Rational& value);

Slope nu_theta(const Rational& theta, const ClTriple& t);
Rational theta_js(const Integer& c, const Integer& s);

struct Dim1Wall {
  Rational theta;
  std::vector<std::pair<Integer, Integer>> witnesses;  // (c0, s0); empty for the Joyce-Song value
};

// Ascending; the first entry is theta_JS.
std::vector<Dim1Wall> dim1_walls(const Integer& c, const Integer& s, const Ch3Bound& bound, const Integer& n);

struct ChamberReport {
  Rational theta_js;
  std::pair<Rational, Rational> empty_chamber;
  std::vector<Dim1Wall> walls;  // excludes theta_JS
  std::string large_volume = "stable pairs";
  std::string assumption = "H^1(F(n)) = 0 for every Gieseker semistable F of the given class";
};
ChamberReport chamber_report(const Integer& c, const Integer& s, const Integer& n,
                             const Ch3Bound& bound = constant_bound(0));

Relation easy_js_relation(const Integer& beta_h, const Integer& m, const Integer& n, const ThreefoldModel& X);

}  // namespace tiltwall
