#pragma once

#include <gmpxx.h>

#include <string>

namespace tiltwall {

using Integer = mpz_class;
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den = 1);

// Accepts "p", "p/q", "-p/q".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Integer lcm_of(const Integer& a, const Integer& b);
Integer gcd_of(const Integer& a, const Integer& b);

// Fixed-point decimal with exactly `digits` fractional digits, rounded half away from zero.
std::string to_decimal(const Rational& q, int digits);

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

}  // namespace tiltwall
