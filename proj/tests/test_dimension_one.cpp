#include <doctest.h>

#include "oracles.hpp"
#include "tiltwall/dimension_one.hpp"
#include "tiltwall/errors.hpp"

using namespace tiltwall;

namespace {

std::map<Rational, std::vector<std::pair<long, long>>, RationalLess> as_map(const std::vector<Dim1Wall>& walls) {
  std::map<Rational, std::vector<std::pair<long, long>>, RationalLess> out;
  for (size_t i = 1; i < walls.size(); ++i)
    for (const auto& [c0, s0] : walls[i].witnesses) out[walls[i].theta].push_back({c0.get_si(), s0.get_si()});
  return out;
}

}  // namespace

TEST_CASE("slope on the pair category") {
  CHECK(nu_theta(rat(3, 7), {1, 0, 0}) == Slope{false, rat(3, 7)});
  CHECK(nu_theta(rat(3, 7), {0, 2, 3}) == Slope{false, rat(3, 2)});
  CHECK(nu_theta(-5, {0, 2, 3}) == Slope{false, rat(3, 2)});
  CHECK(nu_theta(1, {0, 0, 5}) == Slope::infinity());
  CHECK_THROWS_AS(nu_theta(1, {-1, 0, 0}), Error);
}

TEST_CASE("Joyce-Song value of theta") {
  CHECK(theta_js(1, 1) == 1);
  CHECK(theta_js(2, -3) == rat(-3, 2));
  CHECK_THROWS_AS(theta_js(0, 1), Error);
}

TEST_CASE("walls for minimal curve classes") {
  for (long b : {-5, 0, 3}) {
    auto walls = dim1_walls(1, 1, constant_bound(b), 4);
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].theta == 1);
    CHECK(walls[0].witnesses.empty());
  }
}

TEST_CASE("walls match exhaustive enumeration") {
  auto walls = dim1_walls(2, 0, constant_bound(-3), 7);
  CHECK(walls.size() == 4);  // theta_JS = 0, then s0 = 1, 2, 3 with c0 = 1
  for (long c = 1; c <= 4; ++c) {
    for (long s = -6; s <= 6; ++s) {
      for (long b : {-3, -1, 0, 2}) {
        auto lib = dim1_walls(c, s, constant_bound(b), 5);
        auto ref = oracle::dim1_exhaustive(c, s, b, 20);
        std::map<Rational, std::vector<std::pair<long, long>>, RationalLess> ref_sorted(ref.begin(), ref.end());
        CHECK(as_map(lib) == ref_sorted);
        CHECK(lib.front().theta == rat(s, c));
        for (size_t i = 1; i < lib.size(); ++i) {
          CHECK(lib[i - 1].theta < lib[i].theta);
          for (const auto& [c0, s0] : lib[i].witnesses) CHECK(rat(s - s0, c - c0) < rat(s, c));
        }
      }
    }
  }
}

TEST_CASE("chamber report") {
  ChamberReport r = chamber_report(1, 1, 8);
  CHECK(r.theta_js == 1);
  CHECK(r.empty_chamber == std::pair<Rational, Rational>{0, 1});
  CHECK(r.walls.empty());
  CHECK(r.large_volume == "stable pairs");
  ChamberReport q = chamber_report(3, -2, 8, constant_bound(-4));
  CHECK(q.empty_chamber.second - q.empty_chamber.first == 1);
  CHECK_FALSE(q.walls.empty());
}

TEST_CASE("stable pairs of minimal degree") {
  ThreefoldModel X = ThreefoldModel::quintic();
  Relation r = easy_js_relation(1, 1, 2, X);
  REQUIRE(r.right.size() == 1);
  CHECK(r.right[0].coef == 3);
  CHECK(r.left.kind == SymbolKind::PT);
  CHECK(r.left.chi == 3);
  CHECK(easy_js_relation(1, 1, 0, X).right[0].coef == 1);
  for (long m = -3; m <= 3; ++m) {
    Rational a = easy_js_relation(1, m, 5, X).right[0].coef / (m + 5);
    Rational b = easy_js_relation(1, m + 1, 5, X).right[0].coef / (m + 6);
    CHECK(a == -b);
  }
}
