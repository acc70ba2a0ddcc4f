#include "tiltwall/threefold.hpp"

#include <tuple>

#include "tiltwall/errors.hpp"

namespace tiltwall {

ThreefoldModel ThreefoldModel::quintic() { return {"quintic", 5, 50, 1, Rational(1), true}; }

void ThreefoldModel::validate() const {
  if (h3 < 1) throw Error(ErrorKind::InvalidArgument, "model: h3 must be >= 1");
  if (tors < 1) throw Error(ErrorKind::InvalidArgument, "model: tors must be >= 1");
  if (cmin <= 0) throw Error(ErrorKind::InvalidArgument, "model: cmin must be positive");
  if (!is_integer(cmin * h3)) throw Error(ErrorKind::InvalidArgument, "model: cmin*h3 must be an integer");
}

bool KClass::operator<(const KClass& o) const {
  if (r != o.r) return r < o.r;
  if (c != o.c) return c < o.c;
  if (s != o.s) return s < o.s;
  return d < o.d;
}

std::string KClass::str() const {
  return "(" + r.get_str() + ", " + to_string(c) + ", " + to_string(s) + ", " + to_string(d) + ")";
}

KClass structure_sheaf() { return {1, 0, 0, 0}; }

KClass line_bundle(const Rational& n) { return ch_twist(structure_sheaf(), n); }

KClass ch_twist(const KClass& v, const Rational& n) {
  Rational n2 = n * n, n3 = n2 * n;
  Rational r(v.r);
  return {v.r, v.c + n * r, v.s + n * v.c + n2 * r / 2, v.d + n * v.s + n2 * v.c / 2 + n3 * r / 6};
}

KClass ch_b(const KClass& v, const Rational& b) { return ch_twist(v, -b); }

KClass dual(const KClass& v) { return {v.r, -v.c, v.s, -v.d}; }

KClass product(const KClass& v, const KClass& w) {
  Rational r(v.r), rp(w.r);
  Rational c = r * w.c + v.c * rp;
  Rational s = r * w.s + v.c * w.c + v.s * rp;
  Rational d = r * w.d + v.c * w.s + v.s * w.c + v.d * rp;
  return {v.r * w.r, c, s, d};
}

Rational delta(const KClass& v, const ThreefoldModel& X) {
  Rational h6 = Rational(X.h3 * X.h3);
  return h6 * (v.c * v.c - 2 * v.s * Rational(v.r));
}

Rational euler(const KClass& v, const ThreefoldModel& X) {
  return v.d * Rational(X.h3) + v.c * Rational(X.c2h) / 12;
}

Rational euler_pair(const KClass& v, const KClass& w, const ThreefoldModel& X) {
  return euler(product(dual(v), w), X);
}

Rational signed_euler(const Rational& chi) {
  if (!is_integer(chi)) throw Error(ErrorKind::NonIntegerEuler, "Euler pairing " + to_string(chi) + " is not an integer");
  Integer e = chi.get_num() - 1;
  bool odd = mpz_odd_p(e.get_mpz_t()) != 0;
  return odd ? Rational(-chi) : chi;
}

Rational chi_bar(const KClass& v, const KClass& w, const ThreefoldModel& X) {
  return signed_euler(euler_pair(v, w, X));
}

Rational HilbertPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string HilbertPolynomial::str() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = coeffs[static_cast<size_t>(k)];
    if (a == 0 && degree() > 0) continue;
    if (!out.empty()) out += a < 0 ? " - " : " + ";
    else if (a < 0) out += "-";
    Rational m = abs(a);
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (k == 0 || m != 1) out += to_string(m) + (mono.empty() ? "" : "*");
    out += mono;
  }
  return out.empty() ? "0" : out;
}

HilbertPolynomial hilbert(const KClass& v, const ThreefoldModel& X) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroClass, "Hilbert polynomial of the zero class");
  Rational h(X.h3), c2(X.c2h), r(v.r);
  std::vector<Rational> a(4);
  a[3] = h * r / 6;
  a[2] = h * v.c / 2;
  a[1] = h * v.s + c2 * r / 12;
  a[0] = h * v.d + c2 * v.c / 12;
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  if (a.back() == 0) throw Error(ErrorKind::ZeroClass, "class has zero Hilbert polynomial");
  return {a};
}

HilbertPolynomial reduced(const HilbertPolynomial& p) {
  HilbertPolynomial q = p;
  Rational lead = p.leading();
  for (auto& a : q.coeffs) a /= lead;
  return q;
}

// A constant polynomial is kept as is, so every class has a nonzero truncated form.
HilbertPolynomial truncated(const HilbertPolynomial& p) {
  HilbertPolynomial q = reduced(p);
  if (q.degree() > 0) q.coeffs[0] = 0;
  return q;
}

bool precedes(const HilbertPolynomial& p, const HilbertPolynomial& q) {
  if (p.degree() != q.degree()) return p.degree() > q.degree();
  for (int k = p.degree(); k >= 0; --k) {
    int c = cmp(p.coeffs[static_cast<size_t>(k)], q.coeffs[static_cast<size_t>(k)]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool integrality_check(const KClass& v, const ThreefoldModel& X) {
  if (!is_integer(v.c * Rational(X.h3))) return false;
  for (int n = 0; n <= 3; ++n)
    if (!is_integer(euler(ch_twist(v, n), X))) return false;
  return true;
}

bool integral_up_to_ch3(const Integer& r, const Rational& c, const Rational& s, const ThreefoldModel& X) {
  if (!is_integer(c * Rational(X.h3))) return false;
  KClass v{r, c, s, 0};
  Rational base = euler(v, X);
  for (int n = 1; n <= 3; ++n)
    if (!is_integer(euler(ch_twist(v, n), X) - base)) return false;
  return true;
}

Rational ch3_offset(const Integer& r, const Rational& c, const Rational& s, const ThreefoldModel& X) {
  return euler(KClass{r, c, s, 0}, X);
}

std::pair<KClass, KClass> stable_pair_class(const Rational& beta_h, const Rational& m, const Integer& n,
                                            const ThreefoldModel&) {
  if (beta_h <= 0) throw Error(ErrorKind::InvalidArgument, "stable_pair_class needs beta_h > 0");
  KClass ideal{1, 0, -beta_h, -m};
  KClass shifted = -dual(ideal);
  return {ideal, ch_twist(shifted, Rational(-n))};
}

}  // namespace tiltwall
