#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/walls.hpp"

using namespace tiltwall;

namespace {

const ThreefoldModel X = ThreefoldModel::quintic();
const oracle::Model OX{5, 50};
const KClass OD{0, 1, rat(-1, 2), rat(1, 6)};

KClass close_class(const Rational& c, const Rational& s, const Rational& d, const Rational& n) {
  return {-1, c + n, s - n * n / 2, d + n * n * n / 6};
}

std::set<oracle::Line> line_set(const std::vector<Wall>& walls) {
  std::set<oracle::Line> out;
  for (const auto& w : walls) out.insert({w.line.A(), w.line.B(), w.line.C()});
  return out;
}

std::set<oracle::Line> line_set(const std::map<oracle::Line, std::set<oracle::Pair>>& ref) {
  std::set<oracle::Line> out;
  for (const auto& [l, pairs] : ref) out.insert(l);
  return out;
}

}  // namespace

TEST_CASE("Joyce-Song wall endpoints") {
  Wall w = js_wall(close_class(1, 0, 0, 10), 10, X);
  CHECK(w.kind == WallKind::joyce_song);
  CHECK(w.b1 == QuadNum(-10));
  CHECK(w.b2 == QuadNum(10));

  Wall u = js_wall(close_class(1, rat(-1, 2), rat(1, 6), 10), 10, X);
  CHECK(u.b1 == QuadNum(-10));
  CHECK(u.b2 == QuadNum(9));
  CHECK(u.slope == rat(-1, 2));
  CHECK(u.line.contains({-11, rat(101, 2)}));
  CHECK(u.line.contains({-10, 50}));
  REQUIRE(u.decompositions.size() == 1);
  CHECK(u.decompositions[0].v0 == OD);

  CHECK_THROWS_AS(js_wall(close_class(0, 0, 0, 10), 10, X), Error);
}

TEST_CASE("the safe line of a close class is its Joyce-Song wall") {
  for (long n : {4, 10, 31}) {
    for (const KClass& v : {OD, KClass(0, 2, -1, rat(4, 3)), KClass(0, rat(3, 5), rat(1, 10), 0)}) {
      KClass w = close_class(v.c, v.s, v.d, n);
      SafeLine s = safe_line(w, v.c, X);
      REQUIRE(s.line.has_value());
      CHECK(*s.line == js_wall(w, n, X).line);
    }
  }
}

TEST_CASE("safe line of a line bundle class is tangent") {
  KClass v = -line_bundle(-6);
  SafeLine s = safe_line(v, 1, X);
  CHECK(s.b1 == QuadNum(-6));
  CHECK(s.b2 == QuadNum(-6));
  CHECK(s.slope == QuadNum(-6));
}

TEST_CASE("safe line with an irrational slope") {
  KClass v{-1, 3, -4, 0};  // Delta small relative to the cap
  SafeLine s = safe_line(v, 10, X);
  CHECK_FALSE(s.slope.is_rational());
  CHECK_FALSE(s.line.has_value());
  CHECK(s.side(s.through) == Side::on);
  CHECK_THROWS_AS(safe_line(KClass(-1, 0, -1, 0), 1, X), Error);
}

TEST_CASE("safe area") {
  KClass w = close_class(1, rat(-1, 2), rat(1, 6), 10);
  PlanePoint p = pi(w);
  CHECK_FALSE(in_safe_area(p, w, 1, X));
  CHECK_FALSE(in_safe_area({p.b + 1, p.w - rat(1, 2)}, w, 1, X));
  CHECK(in_safe_area({p.b + 1, p.w}, w, 1, X));
  CHECK_FALSE(in_safe_area({p.b - 1, p.w + 40}, w, 1, X));
}

TEST_CASE("closeness to v_n0") {
  Rational n0 = 10;
  CloseWitness cw = close_to(v_n0(OD, n0), OD, n0, X);
  CHECK(cw.close);
  CHECK(cw.delta_n == 0);
  CHECK(cw.s == OD.s);
  CHECK(cw.d == OD.d);

  Rational n = n0 - rat(1, 3) - rat(1, 5);
  CloseWitness far = close_to(close_class(1, OD.s, OD.d, n), OD, n0, X);
  CHECK_FALSE(far.close);
  CHECK_FALSE(far.bounds_report[1]);

  CloseWitness high = close_to(close_class(1, OD.s + 1, OD.d, n0), OD, n0, X);
  CHECK_FALSE(high.close);
  CHECK_FALSE(high.bounds_report[2]);
  CHECK(high.bounds_report[1]);
}

TEST_CASE("shifted class") {
  ShiftedClass sc = shifted_class(1, rat(2, 3), 0, 0, 10, 0);
  CHECK(sc.n_prime == rat(29, 3));
  CHECK(sc.s_tilde == rat(-10, 3) + rat(1, 18));
  CHECK(sc.d_tilde == rat(50, 3) - rat(5, 9) + rat(1, 162));
  CHECK(sc.delta_n_prime == rat(1, 3));
  CHECK_THROWS_AS(shifted_class(1, 1, 0, 0, 10, 0), Error);
  CHECK_THROWS_AS(shifted_class(1, 0, 0, 0, 10, 0), Error);
}

TEST_CASE("admissible n0") {
  CHECK_FALSE(n0_admissible(OD, 1, X));
  CHECK(n0_admissible(OD, 1000000, X));
  CHECK_FALSE(n0_admissible(OD, rat(21, 2), X));
  Rational m = minimal_admissible_n0(OD, X);
  CHECK(m == 2);
  for (long n = 2; n <= 60; ++n) CHECK(n0_admissible(OD, n, X));
}

TEST_CASE("rank-zero walls are parallel and match brute force") {
  for (const KClass& v : {OD, KClass(0, 2, -1, rat(4, 3))}) {
    auto walls = wall_candidates(v, {}, X, {});
    for (const auto& w : walls) CHECK(w.slope == v.s / v.c);
    auto ref = oracle::brute_force_walls({v.r, v.c, v.s, v.d}, {}, OX, {});
    CHECK(line_set(walls) == line_set(ref));
  }
}

TEST_CASE("walls of a nonzero-rank class go through its projection") {
  KClass v{-1, 2, -1, rat(1, 3)};
  auto walls = wall_candidates(v, {}, X, {});
  REQUIRE_FALSE(walls.empty());
  Rational dv = delta(v, X);
  for (size_t i = 0; i < walls.size(); ++i) {
    CHECK(walls[i].line.contains(pi(v)));
    if (i > 0) CHECK(walls[i].slope < walls[i - 1].slope);
    for (const auto& d : walls[i].decompositions) {
      Rational d0 = delta(d.v0, X), d1 = delta(d.v1, X);
      CHECK(d0 >= 0);
      CHECK(d1 >= 0);
      CHECK(d0 + d1 <= dv);
    }
  }
}

TEST_CASE("region filters agree with brute force") {
  KClass w = v_n0(OD, 10);
  PlaneLine lf = bg_line(w, X);
  Region region{lf, pi(w).b, false};
  auto walls = wall_candidates(w, region, X, {});
  auto ref = oracle::brute_force_walls({w.r, w.c, w.s, w.d}, {oracle::Line{lf.A(), lf.B(), lf.C()}, pi(w).b, false}, OX,
                                       {});
  CHECK(line_set(walls) == line_set(ref));
  CHECK_FALSE(walls.empty());

  KClass v{0, 2, -1, rat(4, 3)};
  auto all = wall_candidates(v, {}, X, {});
  REQUIRE(all.size() >= 2);
  Region above{all[all.size() / 2].line, std::nullopt, true};
  auto upper = wall_candidates(v, above, X, {});
  auto ref2 = oracle::brute_force_walls({v.r, v.c, v.s, v.d},
                                        {oracle::Line{above.above_line->A(), above.above_line->B(), above.above_line->C()},
                                         std::nullopt, true},
                                        OX, {});
  CHECK(line_set(upper) == line_set(ref2));
  CHECK(upper.size() < all.size());
}

TEST_CASE("no walls above a line for rank-zero classes") {
  KClass v{0, 2, -1, rat(4, 3)};
  auto walls = wall_candidates(v, {}, X, {});
  REQUIRE_FALSE(walls.empty());
  PlaneLine top = walls.front().line, bottom = walls.front().line;
  for (const auto& w : walls) {
    if (w.line.w_at(Rational(0)) > top.w_at(Rational(0))) top = w.line;
    if (w.line.w_at(Rational(0)) < bottom.w_at(Rational(0))) bottom = w.line;
  }
  PlaneLine higher = PlaneLine::through({0, top.w_at(Rational(0)) + rat(1, 7)}, top.slope());
  CHECK(rank0_no_walls_above(v, higher, X, {}));
  CHECK_FALSE(rank0_no_walls_above(v, bottom, X, {}));
  CHECK(rank0_no_walls_above(KClass(0, 1, rat(-1, 2), rat(1, 6)), bg_line(v_n0(OD, 10), X), X, {}));
}

TEST_CASE("destabilizers of v_n0") {
  for (long n0 : {10, 17}) {
    KClass w = v_n0(OD, n0);
    auto walls = destabilizing_walls(OD, n0, X, {});
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].kind == WallKind::joyce_song);
    for (const auto& d : walls[0].decompositions) {
      CHECK(d.v0.r == 0);
      CHECK(d.v1.r == -1);
      CHECK(d.v0.c > 0);
      CHECK(d.v1.c >= Rational(n0) - OD.c / 3);
      REQUIRE(d.classification.has_value());
      CHECK(d.classification->kind == ClassCase::js_wall_T_factor);
    }
    CHECK(w.r == -1);
  }
}

TEST_CASE("classification of hand-made decompositions") {
  Rational n0 = 10;
  KClass w = v_n0(OD, n0);
  CloseWitness cw = close_to(w, OD, n0, X);
  Wall js = js_wall(w, n0, X);

  Decomposition neg;
  neg.v1 = close_class(rat(-1, 5), 0, 0, n0);
  neg.v0 = w - neg.v1;
  CHECK(classify_destabilizer(w, cw, js, neg, n0, X).kind == ClassCase::excluded);

  Decomposition t = js.decompositions[0];
  CHECK(classify_destabilizer(w, cw, js, t, n0, X).kind == ClassCase::js_wall_T_factor);

  Decomposition bad = t;
  bad.v0.c += 1;
  CHECK_THROWS_AS(classify_destabilizer(w, cw, js, bad, n0, X), Error);
}

TEST_CASE("search limits are errors") {
  Limits tiny;
  tiny.max_lattice_points = 3;
  CHECK_THROWS_AS(wall_candidates(KClass(0, 2, -1, rat(4, 3)), {}, X, tiny), Error);
}
