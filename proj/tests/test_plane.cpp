#include <doctest.h>

#include "tiltwall/errors.hpp"
#include "tiltwall/plane.hpp"

using namespace tiltwall;

namespace {

const KClass V10{-1, 11, rat(-101, 2), rat(1001, 6)};

}  // namespace

TEST_CASE("QuadNum arithmetic and ordering") {
  QuadNum r2 = QuadNum::sqrt(2), r8 = QuadNum::sqrt(8);
  CHECK(r8 == r2 * Rational(2));
  CHECK(r2 * r2 == QuadNum(2));
  CHECK(QuadNum::sqrt(rat(9, 4)) == QuadNum(rat(3, 2)));
  CHECK(r2 > QuadNum(rat(141, 100)));
  CHECK(r2 < QuadNum(rat(142, 100)));
  CHECK(r2.floor() == 1);
  CHECK((-r2).floor() == -2);
  CHECK((-r2).ceil() == -1);
  CHECK(r2.to_decimal(5) == "1.41421");
  CHECK((QuadNum(1) - r2).sign() < 0);
}

TEST_CASE("projections") {
  for (long n : {0, 1, 4, 10}) CHECK(pi(line_bundle(-n)) == PlanePoint{Rational(-n), rat(n * n, 2)});
  CHECK(pi(V10) == PlanePoint{-11, rat(101, 2)});
  CHECK_THROWS_AS(pi(KClass(0, 1, 0, 0)), Error);
  CHECK(pi_prime(KClass(0, 1, rat(-1, 2), rat(1, 6))) == PlanePoint{-1, rat(1, 2)});
  CHECK(pi_prime(KClass(3, 2, 0, 0)) == PlanePoint{0, 0});
  CHECK_THROWS_AS(pi_prime(KClass(1, 0, 1, 0)), Error);
}

TEST_CASE("lines") {
  PlaneLine l = line_through({-11, rat(101, 2)}, {-10, 50});
  CHECK(l.slope() == rat(-1, 2));
  CHECK(l.contains({-11, rat(101, 2)}));
  CHECK(PlaneLine::make(l.A(), l.B(), l.C()) == l);
  CHECK(PlaneLine::make(l.A() * 6, l.B() * 6, l.C() * 6) == l);
  PlaneLine v = line_through({1, 0}, {1, 1});
  CHECK(v.vertical());
  CHECK(v == PlaneLine::make(1, 0, 1));
  CHECK_THROWS_AS(line_through({1, 1}, {1, 1}), Error);
}

TEST_CASE("intersection with the boundary parabola") {
  PlaneLine js = line_through({-11, rat(101, 2)}, {-10, 50});
  auto [b1, b2] = parabola_roots(js);
  CHECK(b1 == QuadNum(-10));
  CHECK(b2 == QuadNum(9));
  CHECK(segment_contains_integer_b(js) == Integer(-9));

  for (long n : {1, 3, 7}) {
    PlaneLine t = PlaneLine::through({Rational(-n), rat(n * n, 2)}, -n);
    auto [t1, t2] = parabola_roots(t);
    CHECK(t1 == QuadNum(-n));
    CHECK(t2 == QuadNum(-n));
    CHECK_FALSE(segment_contains_integer_b(t).has_value());
  }
  auto [z1, z2] = parabola_roots(PlaneLine::make(0, 1, 0));
  CHECK(z1 == QuadNum(0));
  CHECK(z2 == QuadNum(0));
  CHECK(segment_contains_integer_b(PlaneLine::make(0, 8, 1)) == Integer(0));
  CHECK_THROWS_AS(parabola_roots(PlaneLine::make(0, 1, -1)), Error);
}

TEST_CASE("the open region U") {
  CHECK(in_U({0, 1}));
  CHECK_FALSE(in_U({2, 2}));
  CHECK_FALSE(in_U({-11, rat(101, 2)}));
  PlaneLine l = PlaneLine::make(1, 1, 2);  // w = 2 - b
  CHECK(point_side(l, {0, 3}) == Side::above);
  CHECK(point_side(l, {0, 2}) == Side::on);
  CHECK(point_side(l, {0, 1}) == Side::below);
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational_between(QuadNum(rat(-1, 2)), QuadNum(rat(5, 2))) == 0);
  CHECK(simplest_rational_between(QuadNum(rat(1, 3)), QuadNum(rat(1, 2))) == rat(2, 5));
  CHECK(simplest_rational_between(QuadNum::sqrt(2), QuadNum::sqrt(3)) == rat(3, 2));
}

TEST_CASE("the region U(w_n)") {
  PlaneLine lf = PlaneLine::make(1, 2, 90);
  PlanePoint p = pi(V10);
  CHECK_FALSE(region_U_of(V10, lf, p));
  CHECK(region_U_of(V10, lf, {p.b + 1, p.w + lf.slope() + 1}));
  CHECK_FALSE(region_U_of(V10, lf, {p.b - 1, p.w + 10}));
}
