#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tiltwall/rational.hpp"

namespace tiltwall {

// Numerical data of a polarized threefold with Picard rank one.
struct ThreefoldModel {
  std::string name;
  Integer h3;         // H^3
  Integer c2h;        // c_2(X).H
  Integer tors;       // order of the torsion subgroup of H^2(X, Z)
  Rational cmin;      // minimal D.H^2/H^3 over effective divisors
  bool calabi_yau = true;

  static ThreefoldModel quintic();
  void validate() const;
};

// Normalized Chern character (ch0, ch1.H^2/H^3, ch2.H/H^3, ch3/H^3).
struct KClass {
  Integer r;
  Rational c, s, d;

  KClass() = default;
  KClass(const Integer& r_, const Rational& c_, const Rational& s_, const Rational& d_) : r(r_), c(c_), s(s_), d(d_) {}

  KClass operator+(const KClass& o) const { return {r + o.r, c + o.c, s + o.s, d + o.d}; }
  KClass operator-(const KClass& o) const { return {r - o.r, c - o.c, s - o.s, d - o.d}; }
  KClass operator-() const { return {-r, -c, -s, -d}; }
  KClass scaled(const Integer& k) const { return {r * k, c * k, s * k, d * k}; }
  bool operator==(const KClass& o) const { return r == o.r && c == o.c && s == o.s && d == o.d; }
  bool operator!=(const KClass& o) const { return !(*this == o); }
  bool operator<(const KClass& o) const;
  bool is_zero() const { return r == 0 && c == 0 && s == 0 && d == 0; }
  std::string str() const;
};

KClass structure_sheaf();
KClass line_bundle(const Rational& n);  // ch of O(n)

KClass ch_twist(const KClass& v, const Rational& n);
KClass ch_b(const KClass& v, const Rational& b);
KClass dual(const KClass& v);
KClass product(const KClass& v, const KClass& w);

Rational delta(const KClass& v, const ThreefoldModel& X);
Rational euler(const KClass& v, const ThreefoldModel& X);
Rational euler_pair(const KClass& v, const KClass& w, const ThreefoldModel& X);
Rational signed_euler(const Rational& chi);
Rational chi_bar(const KClass& v, const KClass& w, const ThreefoldModel& X);

// Coefficients stored by ascending power; the leading coefficient is nonzero.
struct HilbertPolynomial {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Rational& leading() const { return coeffs.back(); }
  Rational operator()(const Rational& t) const;
  bool operator==(const HilbertPolynomial& o) const { return coeffs == o.coeffs; }
  std::string str() const;
};

HilbertPolynomial hilbert(const KClass& v, const ThreefoldModel& X);
HilbertPolynomial reduced(const HilbertPolynomial& p);
HilbertPolynomial truncated(const HilbertPolynomial& p);
bool precedes(const HilbertPolynomial& p, const HilbertPolynomial& q);

bool integrality_check(const KClass& v, const ThreefoldModel& X);
// True when some ch3 makes (r, c, s, ch3) pass integrality_check.
bool integral_up_to_ch3(const Integer& r, const Rational& c, const Rational& s, const ThreefoldModel& X);
// euler(r, c, s, 0); integral ch3 values are exactly (k - offset)/H^3 for integers k.
Rational ch3_offset(const Integer& r, const Rational& c, const Rational& s, const ThreefoldModel& X);

// Pair (class of I = [O_X -> F] with ch F = (0,0,beta_h,m), class of I^dual[1] twisted by O(-n)).
std::pair<KClass, KClass> stable_pair_class(const Rational& beta_h, const Rational& m, const Integer& n,
                                            const ThreefoldModel& X);

}  // namespace tiltwall
