#include "tiltwall/rational.hpp"

#include "tiltwall/errors.hpp"

namespace tiltwall {

Rational rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t.push_back(ch);
  if (t.empty()) throw Error(ErrorKind::Parse, "empty rational");
  auto slash = t.find('/');
  Integer num, den = 1;
  auto parse_int = [&](const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + text + "'");
    return z;
  };
  if (slash == std::string::npos) {
    num = parse_int(t);
  } else {
    num = parse_int(t.substr(0, slash));
    den = parse_int(t.substr(slash + 1));
  }
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
  return rat(num, den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer units = floor_of(scaled);
  std::string s = units.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  bool zero = units == 0;
  return (q < 0 && !zero ? "-" : "") + s;
}

}  // namespace tiltwall
