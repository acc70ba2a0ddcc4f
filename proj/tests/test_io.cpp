#include <doctest.h>

#include "tiltwall/errors.hpp"
#include "tiltwall/io.hpp"
#include "tiltwall/plot.hpp"

using namespace tiltwall;

namespace {

const ThreefoldModel X = ThreefoldModel::quintic();
const KClass OD{0, 1, rat(-1, 2), rat(1, 6)};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("rationals and integers") {
  CHECK(to_json(rat(-3, 6)) == Json::array({-1, 2}));
  CHECK(rational_from_json(Json::array({4, -6})) == rat(-2, 3));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(rational_from_json(Json("-5/10")) == rat(-1, 2));
  Integer big("123456789012345678901234567890");
  CHECK(to_json(big) == Json("123456789012345678901234567890"));
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(kind_of([] { rational_from_json(Json::array({1, 0})); }) == ErrorKind::Parse);
  CHECK(kind_of([] { rational_from_json(Json("x/2")); }) == ErrorKind::Parse);
  CHECK(parse_rational("  -7/21") == rat(-1, 3));
  CHECK(to_decimal(rat(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(rat(2, 3), 0) == "1");
}

TEST_CASE("models and classes round trip") {
  CHECK(dump(to_json(model_from_json(to_json(X)))) == dump(to_json(X)));
  CHECK(class_from_json(to_json(OD)) == OD);
  CHECK(class_from_json(parse_json_text(R"([0, 1, "-1/2", [1, 6]])")) == OD);
  CHECK(kind_of([] { class_from_json(parse_json_text(R"([0, 1, 2])")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_json_text("{\"r\": "); }) == ErrorKind::Parse);
  CHECK(load_model("quintic").h3 == 5);
  Json bad = to_json(X);
  bad["h3"] = 0;
  CHECK_THROWS_AS(model_from_json(bad), Error);
}

TEST_CASE("walls and derivations round trip") {
  auto walls = destabilizing_walls(OD, 10, X, {});
  Json j = to_json(walls);
  CHECK(dump(to_json(walls_from_json(j))) == dump(j));
  Json w0 = j.at(0);
  CHECK(w0.at("line") == Json::array({1, 2, 90}));
  CHECK(w0.at("kind") == "joyce_song");

  Derivation d = walk_walls(OD, 10, X, {});
  Json dj = to_json(d);
  CHECK(dump(to_json(derivation_from_json(dj))) == dump(dj));

  auto more = wall_candidates(KClass{-1, 2, -1, rat(1, 3)}, {}, X, {});
  Json mj = to_json(more);
  CHECK(dump(to_json(walls_from_json(parse_json_text(dump(mj))))) == dump(mj));
}

TEST_CASE("limits") {
  Limits l = limits_from_json(parse_json_text(R"({"threads": 4, "max_abs_rank": 10})"));
  CHECK(l.threads == 4);
  CHECK(l.max_abs_rank == 10);
  CHECK(l.max_terms == Limits{}.max_terms);
  CHECK(limits_from_json(to_json(l)).threads == 4);
  CHECK_THROWS_AS(limits_from_json(parse_json_text(R"({"thread": 4})")), Error);
}

TEST_CASE("plots are deterministic") {
  PlotSpec empty;
  std::string svg = render_svg(empty);
  CHECK(svg == render_svg(empty));
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("<text") == std::string::npos);

  PlotSpec fig = plot_region(OD, 10, X);
  std::string a = render_svg(fig);
  CHECK(a == render_svg(plot_spec_from_json(to_json(fig))));
  CHECK(a.find("l_JS") != std::string::npos);
  CHECK(a.find("Pi(v_n0)") != std::string::npos);

  PlotSpec shuffled = fig;
  std::reverse(shuffled.elements.begin(), shuffled.elements.end());
  CHECK(render_svg(shuffled) == a);

  PlotSpec walls = plot_walls(destabilizing_walls(OD, 10, X, {}));
  CHECK(render_svg(walls).find("wall 1") != std::string::npos);
}

TEST_CASE("plot spec validation") {
  PlotSpec s;
  s.elements.push_back({ElementType::point, "p", std::nullopt, PlanePoint{0, 1}, std::nullopt});
  s.elements.push_back({ElementType::point, "p", std::nullopt, PlanePoint{1, 1}, std::nullopt});
  CHECK_THROWS_AS(s.validate(), Error);
  PlotSpec r;
  r.b_max = r.b_min;
  CHECK_THROWS_AS(render_svg(r), Error);
  CHECK_THROWS_AS(plot_spec_from_json(parse_json_text(R"({"elements": [{"type": "circle"}]})")), Error);
  CHECK_THROWS_AS(plot_spec_from_json(parse_json_text(R"({"elements": [{"type": "line", "label": "x"}]})")), Error);
}
