#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltwall/symbols.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall {

struct DerivationStep {
  std::string tag;
  std::optional<Wall> wall;
  Relation relation;
};

struct Derivation {
  KClass v;
  Rational n0;
  Rational b_star;
  std::vector<DerivationStep> steps;  // walls in the order they are crossed, lowest first
  Relation final;
};

// Throws ModelAssumption unless the model is flagged Calabi-Yau.
void require_calabi_yau(const ThreefoldModel& X);

Relation two_factor_crossing(const KClass& v, const KClass& a1, const KClass& a2, const Wall& wall,
                             const ThreefoldModel& X);
Relation js_base_relation(const KClass& v, const Rational& n0, const ThreefoldModel& X);
Derivation walk_walls(const KClass& v, const Rational& n0, const ThreefoldModel& X, const Limits& limits);
Relation gieseker_tilt_skeleton(const KClass& v, const ThreefoldModel& X, const Limits& limits);
Relation pt_bridge(const KClass& v, const ThreefoldModel& X);
// Replaces every large-volume rank -1 symbol on the right by its stable pair expression.
Relation bridge_to_pt(const Relation& rel, const ThreefoldModel& X);

}  // namespace tiltwall
