#pragma once

#include <string>

#include "tiltwall/rational.hpp"

namespace tiltwall {

// Exact real number a + b*sqrt(D). Canonical: D = 0 iff b = 0, otherwise D > 1 is not a perfect square
// and carries no square factor below a small sieve bound.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const Rational& q) : a_(q) {}  // NOLINT(google-explicit-constructor)
  QuadNum(long q) : a_(q) {}             // NOLINT(google-explicit-constructor)

  // a + b*sqrt(D) for rational D >= 0.
  static QuadNum make(const Rational& a, const Rational& b, const Rational& D);
  static QuadNum sqrt(const Rational& q) { return make(0, 1, q); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& D() const { return D_; }
  bool is_rational() const { return b_ == 0; }
  const Rational& rational() const;

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  // Fixed-point rendering rounded half away from zero; exact.
  std::string to_decimal(int digits) const;
  std::string str() const;

  QuadNum operator-() const;
  QuadNum operator+(const QuadNum& o) const;
  QuadNum operator-(const QuadNum& o) const;
  QuadNum operator*(const Rational& k) const;
  QuadNum operator/(const Rational& k) const;
  QuadNum operator*(const QuadNum& o) const;

  bool operator==(const QuadNum& o) const { return a_ == o.a_ && b_ == o.b_ && D_ == o.D_; }
  bool operator!=(const QuadNum& o) const { return !(*this == o); }

 private:
  Rational a_ = 0, b_ = 0;
  Integer D_ = 0;
};

int cmp(const QuadNum& x, const QuadNum& y);
inline bool operator<(const QuadNum& x, const QuadNum& y) { return cmp(x, y) < 0; }
inline bool operator<=(const QuadNum& x, const QuadNum& y) { return cmp(x, y) <= 0; }
inline bool operator>(const QuadNum& x, const QuadNum& y) { return cmp(x, y) > 0; }
inline bool operator>=(const QuadNum& x, const QuadNum& y) { return cmp(x, y) >= 0; }

}  // namespace tiltwall
