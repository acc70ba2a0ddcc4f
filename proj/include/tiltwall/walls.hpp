#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltwall/plane.hpp"
#include "tiltwall/stability.hpp"

namespace tiltwall {

// Search caps. Hitting any of them raises UnboundedSearch; results are never truncated.
struct Limits {
  Integer max_abs_rank = 100000;
  Integer max_denominator = 1000000;
  std::uint64_t max_lattice_points = 20000000;
  std::uint64_t max_terms = 200000;
  unsigned threads = 1;
  int expand_depth = 0;
};

struct Region {
  std::optional<PlaneLine> above_line;  // walls must be on or above it across its chord in U
  std::optional<Rational> right_of;     // walls must reach b > right_of inside U
  bool strict = false;                  // drop above_line itself
};

struct WallOptions {
  bool sheaf_mode = false;   // rank-0 factors need ch1 >= cmin
  bool resolve_ch3 = false;  // enumerate ch3 of the factors instead of leaving it open
  Rational n = 0;            // twist used to report (c', s', d') of the rank -1 factor
};

struct ShiftedClass {
  Rational n_prime, s_tilde, d_tilde, delta_n_prime;
};

enum class ClassCase { js_wall_T_factor, close_descent, safe_descent, excluded };
const char* name_of(ClassCase c);

struct Classification {
  ClassCase kind = ClassCase::excluded;
  std::optional<ShiftedClass> shifted;
  std::string reason;
};

// When ch3_resolved is false, v0.d, v1.d and d_prime are 0 placeholders.
struct Decomposition {
  KClass v0, v1;
  Rational c_prime, s_prime, d_prime;
  bool ch3_resolved = true;
  std::optional<Classification> classification;
};

enum class WallKind { joyce_song, generic };
const char* name_of(WallKind k);

struct Wall {
  PlaneLine line;
  WallKind kind = WallKind::generic;
  Rational slope;
  QuadNum b1, b2;  // chord endpoints on w = b^2/2
  PlanePoint crossing;  // a point of the wall inside U used for the enumeration
  std::vector<Decomposition> decompositions;
};

std::vector<Wall> wall_candidates(const KClass& v, const Region& region, const ThreefoldModel& X,
                                  const Limits& limits, const WallOptions& options = {});
bool rank0_no_walls_above(const KClass& v0, const PlaneLine& lf, const ThreefoldModel& X, const Limits& limits);

Wall js_wall(const KClass& w_n, const Rational& n, const ThreefoldModel& X);

// Line through Pi(v) solving ch1(v) + b1 = min(cap, b2 - b1). Its slope can be a quadratic irrational.
struct SafeLine {
  PlanePoint through;
  QuadNum slope;
  std::optional<PlaneLine> line;  // set when the slope is rational
  QuadNum b1, b2;
  Side side(const PlanePoint& p) const;
};
SafeLine safe_line(const KClass& v, const Rational& cap_c, const ThreefoldModel& X);
bool in_safe_area(const PlanePoint& p, const KClass& v, const Rational& cap_c, const ThreefoldModel& X);

struct CloseWitness {
  KClass base;    // the rank-0 class v
  Rational n0;
  PlaneLine lf;   // bg_line(v_{n0})
  Rational n, delta_n, s, d;
  // above_lf, delta_n range, s bounds, d bound
  std::array<bool, 4> bounds_report{};
  bool close = false;
};
CloseWitness close_to(const KClass& w_n, const KClass& v, const Rational& n0, const ThreefoldModel& X);

Classification classify_destabilizer(const KClass& w_n, const CloseWitness& params, const Wall& wall,
                                     const Decomposition& dec, const Rational& n0, const ThreefoldModel& X);

ShiftedClass shifted_class(const Rational& c, const Rational& c_prime, const Rational& s_prime,
                           const Rational& d_prime, const Rational& n, const Rational& delta_n);

KClass v_n0(const KClass& v, const Rational& n0);
bool n0_admissible(const KClass& v, const Rational& n0, const ThreefoldModel& X);
Rational minimal_admissible_n0(const KClass& v, const ThreefoldModel& X);

// Walls of v_{n0} above lf and right of Pi(v_{n0}), with sheaf-mode factors and resolved ch3, classified.
std::vector<Wall> destabilizing_walls(const KClass& v, const Rational& n0, const ThreefoldModel& X, const Limits& limits);

}  // namespace tiltwall
