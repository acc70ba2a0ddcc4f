#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltwall/io.hpp"

namespace tiltwall {

enum class ElementType { parabola, region, line, point };

struct PlotElement {
  ElementType type = ElementType::parabola;
  std::string label;
  std::optional<PlaneLine> line;      // line; region: lower boundary
  std::optional<PlanePoint> point;    // point
  std::optional<Rational> right_of;   // region: left boundary
};

struct PlotSpec {
  Rational b_min = -4, b_max = 4, w_min = 0, w_max = 8;
  std::vector<PlotElement> elements;
  int precision = 12;

  void validate() const;
};

PlotSpec plot_spec_from_json(const Json& j);
Json to_json(const PlotSpec& spec);
// Deterministic SVG: coordinates are exact values rendered with `precision` decimals.
std::string render_svg(const PlotSpec& spec);

PlotSpec plot_walls(const std::vector<Wall>& walls);
// Picture of l_f, the Joyce-Song wall and the region U(v_n0) for the class v.
PlotSpec plot_region(const KClass& v, const Rational& n0, const ThreefoldModel& X);

}  // namespace tiltwall
