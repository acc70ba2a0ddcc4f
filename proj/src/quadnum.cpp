#include "tiltwall/quadnum.hpp"

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

int sgn(const Rational& q) { return sgn(q.get_num()); }

// Sign of p + q*sqrt(D) with D > 0 not a square.
int sign_of(const Rational& p, const Rational& q, const Integer& D) {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  int c = cmp(p * p, q * q * Rational(D));
  return c > 0 ? sp : (c < 0 ? sq : 0);
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

QuadNum QuadNum::make(const Rational& a, const Rational& b, const Rational& D) {
  if (D < 0) throw Error(ErrorKind::NegativeDiscriminant, "square root of negative number " + to_string(D));
  QuadNum x;
  x.a_ = a;
  if (b == 0 || D == 0) return x;
  // sqrt(p/q) = sqrt(p*q)/q
  Integer n = D.get_num() * D.get_den();
  Rational coef = b / Rational(D.get_den());
  for (unsigned long p = 2; p * p <= 1000000 && p * p <= n; ++p) {
    Integer pp = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      coef *= Rational(Integer(p));
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    x.a_ += coef * Rational(isqrt(n));
    return x;
  }
  x.b_ = coef;
  x.D_ = n;
  return x;
}

const Rational& QuadNum::rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "irrational value " + str());
  return a_;
}

int QuadNum::sign() const { return is_rational() ? sgn(a_) : sign_of(a_, b_, D_); }

Integer QuadNum::floor() const {
  if (is_rational()) return floor_of(a_);
  Rational R = b_ * b_ * Rational(D_);
  Integer root = isqrt(floor_of(R));
  Integer fy = b_ > 0 ? root : Integer(-root - 1);
  Integer m = floor_of(a_) + fy;
  return (*this - QuadNum(Rational(m + 1))).sign() >= 0 ? Integer(m + 1) : m;
}

Integer QuadNum::ceil() const { return -((-*this).floor()); }

std::string QuadNum::to_decimal(int digits) const {
  if (is_rational()) return tiltwall::to_decimal(a_, digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  QuadNum x = *this * Rational(scale);
  bool neg = sign() < 0;
  if (neg) x = -x;
  Integer units = (x + QuadNum(Rational(1, 2))).floor();
  std::string s = units.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  return (neg && units != 0 ? "-" : "") + s;
}

std::string QuadNum::str() const {
  if (is_rational()) return to_string(a_);
  std::string out = a_ == 0 ? "" : to_string(a_) + (b_ < 0 ? " - " : " + ");
  if (a_ == 0 && b_ < 0) out += "-";
  Rational m = abs(b_);
  if (m != 1) out += to_string(m) + "*";
  return out + "sqrt(" + D_.get_str() + ")";
}

QuadNum QuadNum::operator-() const {
  QuadNum x = *this;
  x.a_ = -a_;
  x.b_ = -b_;
  return x;
}

QuadNum QuadNum::operator+(const QuadNum& o) const {
  if (!is_rational() && !o.is_rational() && D_ != o.D_)
    throw Error(ErrorKind::InvalidArgument, "adding numbers from different quadratic fields");
  const Integer& D = is_rational() ? o.D_ : D_;
  return make(a_ + o.a_, b_ + o.b_, Rational(D));
}

QuadNum QuadNum::operator-(const QuadNum& o) const { return *this + (-o); }

QuadNum QuadNum::operator*(const Rational& k) const {
  if (k == 0) return QuadNum();
  QuadNum x = *this;
  x.a_ *= k;
  x.b_ *= k;
  return x;
}

QuadNum QuadNum::operator/(const Rational& k) const {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  return *this * (1 / k);
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
  if (is_rational()) return o * a_;
  if (o.is_rational()) return *this * o.a_;
  if (D_ != o.D_) throw Error(ErrorKind::InvalidArgument, "multiplying numbers from different quadratic fields");
  Rational d(D_);
  return make(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
}

int cmp(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational() || y.is_rational() || x.D() == y.D()) return (x - y).sign();
  // Compare L = (ax - ay) + bx*sqrt(Dx) against R = by*sqrt(Dy).
  QuadNum L = QuadNum::make(x.a() - y.a(), x.b(), Rational(x.D()));
  int sl = L.sign();
  int sr = sgn(y.b());
  if (sl != sr) return sl > sr ? 1 : -1;
  QuadNum diff = L * L - QuadNum(y.b() * y.b() * Rational(y.D()));
  return sl >= 0 ? diff.sign() : -diff.sign();
}

}  // namespace tiltwall
