#include <doctest.h>

#include "tiltwall/errors.hpp"
#include "tiltwall/wcf.hpp"

using namespace tiltwall;

namespace {

const ThreefoldModel X = ThreefoldModel::quintic();
const KClass OD{0, 1, rat(-1, 2), rat(1, 6)};

}  // namespace

TEST_CASE("base case relation") {
  Relation r = js_base_relation(OD, 10, X);
  CHECK(r.left == InvariantSymbol::J_at(v_n0(OD, 10), Chamber::large_volume()));
  REQUIRE(r.right.size() == 1);
  CHECK(r.right[0].coef == -230);
  REQUIRE(r.right[0].factors.size() == 1);
  CHECK(r.right[0].factors[0] == InvariantSymbol::J_at(OD, Chamber::large_volume()));

  ThreefoldModel T = X;
  T.tors = 3;
  CHECK(js_base_relation(OD, 10, T).right[0].coef == -690);
  CHECK(js_base_relation(OD, 3, X).right[0].coef == -20);
  CHECK(js_base_relation(OD, 4, X).right[0].coef == 35);

  CHECK_THROWS_AS(js_base_relation(KClass(0, 2, -1, rat(4, 3)), 10, X), Error);
  ThreefoldModel fano = X;
  fano.calabi_yau = false;
  try {
    js_base_relation(OD, 10, fano);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModelAssumption);
  }
}

TEST_CASE("walking the walls of a minimal class") {
  Derivation d = walk_walls(OD, 10, X, {});
  REQUIRE(d.steps.size() == 2);
  CHECK(d.steps[0].tag == "below_lf");
  CHECK(d.steps[0].relation.right.empty());
  CHECK(d.steps[1].wall.has_value());
  CHECK(d.steps[1].wall->kind == WallKind::joyce_song);
  CHECK(d.final.str() == js_base_relation(OD, 10, X).str());

  try {
    walk_walls(OD, 1, X, {});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Admissibility);
  }
}

TEST_CASE("a non-minimal class crosses more walls") {
  KClass v{0, 2, -1, rat(4, 3)};
  Rational n0 = std::max(minimal_admissible_n0(v, X), Rational(10));
  Derivation d = walk_walls(v, n0, X, {});
  CHECK(d.steps.size() > 2);
  for (size_t i = 1; i < d.steps.size(); ++i) {
    REQUIRE(d.steps[i].wall.has_value());
    for (const auto& t : d.steps[i].relation.right)
      for (const auto& f : t.factors)
        if (f.kind == SymbolKind::J_at && f.classes[0].r == -1 && f.classes[0] != v_n0(v, n0))
          CHECK(f.classes[0].c - n0 < v.c);
  }
  Relation pt = bridge_to_pt(d.final, X);
  for (const auto& t : pt.right)
    for (const auto& f : t.factors)
      if (f.kind == SymbolKind::J_at && f.chamber.kind == ChamberKind::large_volume) CHECK(f.classes[0].r == 0);
}

TEST_CASE("two-factor crossing") {
  Rational n0 = 10;
  KClass w = v_n0(OD, n0), O = -line_bundle(-n0);
  Wall js = js_wall(w, n0, X);
  Relation r = two_factor_crossing(w, O, OD, js, X);
  Relation s = two_factor_crossing(w, OD, O, js, X);
  CHECK(r.str() == s.str());
  bool found = false;
  for (const auto& t : r.right)
    if (t.factors.size() == 2) {
      found = true;
      CHECK(abs(t.coef) == 230);
    }
  CHECK(found);
  CHECK_THROWS_AS(two_factor_crossing(w, O, OD + KClass(0, 0, 0, rat(1, 5)), js, X), Error);
  KClass a{0, 2, 0, 0};
  CHECK_THROWS_AS(two_factor_crossing(w, a, w - a, js, X), Error);
}

TEST_CASE("Gieseker against tilt at large volume") {
  Relation prim = gieseker_tilt_skeleton(OD, X, {});
  REQUIRE(prim.right.size() == 1);
  CHECK(prim.right[0].factors[0] == InvariantSymbol::J_at(OD, Chamber::large_volume()));

  KClass twice = OD.scaled(2);
  Relation r = gieseker_tilt_skeleton(twice, X, {});
  bool has_pair = false;
  for (const auto& t : r.right) {
    for (const auto& f : t.factors) {
      if (f.kind == SymbolKind::placeholder_C) {
        for (const auto& a : f.classes) {
          CHECK(a.r == 0);
          CHECK(a.c > 0);
        }
        if (f.classes.size() == 2 && f.classes[0] == OD && f.classes[1] == OD) has_pair = true;
      }
    }
  }
  CHECK(has_pair);
}

TEST_CASE("stable pair bridge") {
  for (long m : {-2, 1, 3}) {
    for (long n : {0, 4}) {
      KClass E = stable_pair_class(rat(1, 5), rat(m, 5), n, X).second;
      Relation r = pt_bridge(E, X);
      REQUIRE(r.right.size() == 1);
      CHECK(r.right[0].coef == 1);
      CHECK(r.right[0].factors[0] == InvariantSymbol::PT(1, m));
    }
  }
  CHECK_THROWS_AS(pt_bridge(OD, X), Error);
}

TEST_CASE("relation algebra") {
  InvariantSymbol a = InvariantSymbol::J_at(OD, Chamber::large_volume());
  InvariantSymbol b = InvariantSymbol::PT(1, 2);
  Relation r;
  r.left = InvariantSymbol::J_gieseker(OD);
  r.right = {make_term(2, {a}), make_term(3, {a}), make_term(1, {b, a}), make_term(-1, {a, b})};
  r.normalize();
  REQUIRE(r.right.size() == 1);
  CHECK(r.right[0].coef == 5);
  Relation s = substitute(r, a, {make_term(2, {b}), make_term(1, {})}, 100);
  CHECK(s.right.size() == 2);
  CHECK_THROWS_AS(substitute(s, b, {make_term(1, {a}), make_term(1, {b}), make_term(1, {})}, 1), Error);
}
