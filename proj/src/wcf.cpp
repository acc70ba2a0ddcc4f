#include "tiltwall/wcf.hpp"

#include <algorithm>
#include <functional>

#include "tiltwall/errors.hpp"

namespace tiltwall {

void require_calabi_yau(const ThreefoldModel& X) {
  if (!X.calabi_yau)
    throw Error(ErrorKind::ModelAssumption,
                "wall-crossing relations assume K_X = O_X and H^1(O_X) = 0; model '" + X.name + "' is not Calabi-Yau");
}

namespace {

// -r/ch1^b at b: the rate at which the slope grows as w increases.
Rational slope_drift(const KClass& u, const Rational& b) { return -Rational(u.r) / (u.c - b * Rational(u.r)); }

// Orders (a, b) so the first factor has the larger slope just above the wall.
std::pair<KClass, KClass> orient(const KClass& a, const KClass& b, const Rational& b0) {
  int c = cmp(slope_drift(a, b0), slope_drift(b, b0));
  if (c == 0) throw Error(ErrorKind::SlopeMismatch, "factors have equal slopes on both sides of the wall");
  return c > 0 ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Divisible in K(X) with Pic = ZH, so the part must have integral ch1.
bool is_imprimitive(const KClass& u, const ThreefoldModel& X) {
  Integer bound = abs(floor_of(u.c * Rational(X.h3))) + abs(u.r);
  for (Integer k = 2; k <= bound; ++k) {
    KClass part{0, u.c / Rational(k), u.s / Rational(k), u.d / Rational(k)};
    if (u.r % k != 0 || !is_integer(part.c)) continue;
    part.r = u.r / k;
    if (integrality_check(part, X)) return true;
  }
  return false;
}

struct Walker {
  const ThreefoldModel& X;
  const Limits& limits;
  Rational b_star;
  std::vector<DerivationStep>& steps;

  InvariantSymbol factor_symbol(const KClass& u, const Wall& wall) const {
    if (u.r == 0) return InvariantSymbol::J_at(u, Chamber::large_volume());
    if (u.r == -1 && delta(u, X) == 0) return InvariantSymbol::const_tors();
    return InvariantSymbol::J_at(u, Chamber::above(wall.line), wall.crossing.b);
  }

  // Terms t with J_above(wall)(v) = J_below(wall)(v) + sum t.
  std::vector<Term> crossing_terms(const Wall& wall) const {
    std::vector<Term> out;
    for (const auto& dec : wall.decompositions) {
      auto [a1, a2] = orient(dec.v0, dec.v1, wall.crossing.b);
      Rational chib = chi_bar(a1, a2, X);
      out.push_back(make_term(-chib, {factor_symbol(a1, wall), factor_symbol(a2, wall)}));
      if (dec.v0.r == 0 && is_imprimitive(dec.v0, X))
        out.push_back(make_term(1, {InvariantSymbol::placeholder_C({dec.v0, dec.v1}, X)}));
    }
    return out;
  }

  // J_above(line)(alpha) = J_inf(alpha) + sum over walls of alpha further up, expanded to `depth` levels.
  std::vector<Term> expand_above(const KClass& alpha, const PlaneLine& line, int depth) {
    Region region;
    region.above_line = line;
    region.strict = true;
    region.right_of = pi(alpha).b;
    WallOptions opt;
    opt.sheaf_mode = true;
    opt.resolve_ch3 = true;
    std::vector<Wall> walls = wall_candidates(alpha, region, X, limits, opt);
    Relation rel;
    rel.left = InvariantSymbol::J_at(alpha, Chamber::above(line));
    rel.right.push_back(make_term(1, {InvariantSymbol::J_at(alpha, Chamber::large_volume())}));
    rel.provenance.push_back("expansion of a rank -1 factor above its wall");
    for (auto it = walls.rbegin(); it != walls.rend(); ++it) {
      for (auto t : crossing_terms(*it)) {
        t.coef = -t.coef;
        rel.right.push_back(t);
      }
    }
    rel.normalize();
    steps.push_back({"expand", std::nullopt, rel});
    return expand_symbols(rel, depth - 1).right;
  }

  Relation expand_symbols(Relation rel, int depth) {
    if (depth <= 0) return rel;
    std::vector<InvariantSymbol> todo;
    for (const auto& t : rel.right)
      for (const auto& f : t.factors)
        if (f.kind == SymbolKind::J_at && f.chamber.kind == ChamberKind::above && f.classes[0].r == -1 &&
            std::find(todo.begin(), todo.end(), f) == todo.end())
          todo.push_back(f);
    for (const auto& sym : todo) {
      auto by = expand_above(sym.classes[0], *sym.chamber.line, depth);
      rel = substitute(rel, sym, by, limits.max_terms);
    }
    return rel;
  }
};

}  // namespace

Relation two_factor_crossing(const KClass& v, const KClass& a1, const KClass& a2, const Wall& wall,
                             const ThreefoldModel& X) {
  require_calabi_yau(X);
  if (a1 + a2 != v) throw Error(ErrorKind::InconsistentDecomposition, "factors do not sum to the class");
  const PlanePoint& p = wall.crossing;
  Slope sv = nu_unchecked(p.b, p.w, v);
  if (!(nu_unchecked(p.b, p.w, a1) == sv) || !(nu_unchecked(p.b, p.w, a2) == sv))
    throw Error(ErrorKind::SlopeMismatch, "factor slopes differ from the class slope on the wall");
  auto [first, second] = orient(a1, a2, p.b);
  Rational chib = chi_bar(first, second, X);
  Relation rel;
  rel.left = InvariantSymbol::J_at(v, Chamber::below(wall.line), p.b);
  rel.right.push_back(make_term(1, {InvariantSymbol::J_at(v, Chamber::above(wall.line), p.b)}));
  rel.right.push_back(make_term(chib, {InvariantSymbol::J_at(first, Chamber::above(wall.line), p.b),
                                       InvariantSymbol::J_at(second, Chamber::above(wall.line), p.b)}));
  rel.provenance.push_back("two-factor crossing at wall " + wall.line.str());
  rel.provenance.push_back("first factor " + first.str() + " has the larger slope above the wall");
  rel.normalize();
  return rel;
}

Relation js_base_relation(const KClass& v, const Rational& n0, const ThreefoldModel& X) {
  require_calabi_yau(X);
  if (v.r != 0 || v.c != X.cmin)
    throw Error(ErrorKind::NotBaseCase, "base case needs a rank-zero class with ch1 = cmin, got " + v.str());
  Rational chib = signed_euler(euler(ch_twist(v, n0), X));
  Relation rel;
  rel.left = InvariantSymbol::J_at(v_n0(v, n0), Chamber::large_volume());
  rel.right.push_back(make_term(chib * Rational(X.tors), {InvariantSymbol::J_at(v, Chamber::large_volume())}));
  rel.provenance.push_back("Joyce-Song wall is the only wall for v_n0 when ch1 = cmin");
  rel.normalize();
  return rel;
}

Derivation walk_walls(const KClass& v, const Rational& n0, const ThreefoldModel& X, const Limits& limits) {
  require_calabi_yau(X);
  if (v.r != 0 || v.c <= 0) throw Error(ErrorKind::InvalidArgument, "walk_walls needs a rank-zero class with ch1 > 0");
  if (!integrality_check(v, X)) throw Error(ErrorKind::InvalidArgument, "class " + v.str() + " is not integral");
  if (!n0_admissible(v, n0, X))
    throw Error(ErrorKind::Admissibility, "n0 = " + to_string(n0) + " fails the admissibility checklist");

  Derivation der;
  der.v = v;
  der.n0 = n0;
  KClass w = v_n0(v, n0);
  PlaneLine lf = bg_line(w, X);
  auto [r1, r2] = parabola_roots(lf);
  der.b_star = simplest_rational_between(r1, r2, limits.max_denominator);

  Relation start;
  start.left = InvariantSymbol::J_at(w, Chamber::below(lf));
  start.provenance.push_back("no semistable objects below the Bogomolov-Gieseker line");
  der.steps.push_back({"below_lf", std::nullopt, start});

  std::vector<Wall> walls = destabilizing_walls(v, n0, X, limits);
  Walker walker{X, limits, der.b_star, der.steps};
  std::vector<Term> acc;
  for (auto it = walls.rbegin(); it != walls.rend(); ++it) {
    const Wall& wall = *it;
    Relation rel;
    rel.left = InvariantSymbol::J_at(w, Chamber::above(wall.line), wall.crossing.b);
    rel.right.push_back(make_term(1, {InvariantSymbol::J_at(w, Chamber::below(wall.line), wall.crossing.b)}));
    for (auto& t : walker.crossing_terms(wall)) {
      rel.right.push_back(t);
      acc.push_back(t);
    }
    rel.provenance.push_back("candidate wall; numerical decompositions need not be realized");
    rel.normalize();
    der.steps.push_back({wall.kind == WallKind::joyce_song ? "joyce_song_wall" : "wall", wall, rel});
    if (acc.size() > limits.max_terms) throw Error(ErrorKind::UnboundedSearch, "derivation exceeds max_terms");
  }

  Relation fin;
  fin.left = InvariantSymbol::J_at(w, Chamber::large_volume());
  fin.right = acc;
  fin.provenance.push_back("sum of wall-crossing terms from below the Bogomolov-Gieseker line to large volume");
  fin.normalize();
  fin = walker.expand_symbols(fin, limits.expand_depth);
  fin = substitute(fin, InvariantSymbol::const_tors(), {make_term(Rational(X.tors), {})}, limits.max_terms);
  der.final = fin;
  return der;
}

Relation gieseker_tilt_skeleton(const KClass& v, const ThreefoldModel& X, const Limits& limits) {
  require_calabi_yau(X);
  if (v.r != 0 || v.c <= 0) throw Error(ErrorKind::InvalidArgument, "gieseker_tilt_skeleton needs rank 0 and ch1 > 0");
  Rational h(X.h3);
  if (!is_integer(v.c * h)) throw Error(ErrorKind::InvalidArgument, "ch1 is not on the lattice");
  Integer total = Rational(v.c * h).get_num();
  Integer kmin = ceil_of(X.cmin * h);
  Rational q = v.s / v.c;
  HilbertPolynomial target = truncated(hilbert(v, X));

  Relation rel;
  rel.left = InvariantSymbol::J_gieseker(v);
  rel.right.push_back(make_term(1, {InvariantSymbol::J_at(v, Chamber::large_volume())}));
  rel.provenance.push_back("Gieseker stability against large-volume tilt stability");

  auto upper = [&](const Rational& c, const Rational& s) -> Rational { return s * s / (2 * c) + c * c * c / 24; };
  std::vector<Integer> parts;
  std::uint64_t count = 0;

  std::function<void(const std::vector<Integer>&, size_t, Rational, std::vector<KClass>&)> assign_d =
      [&](const std::vector<Integer>& ks, size_t i, Rational remaining, std::vector<KClass>& chosen) {
        Rational c = Rational(ks[i]) / h, s = q * c;
        if (i + 1 == ks.size()) {
          KClass last{0, c, s, remaining};
          if (remaining > upper(c, s) || !integrality_check(last, X)) return;
          if (i > 0 && ks[i] == ks[i - 1] && remaining > chosen.back().d) return;
          chosen.push_back(last);
          bool same = true;
          for (const auto& a : chosen) same = same && truncated(hilbert(a, X)) == target;
          if (same) {
            std::vector<InvariantSymbol> fs{InvariantSymbol::placeholder_C(chosen, X)};
            for (const auto& a : chosen) fs.push_back(InvariantSymbol::J_at(a, Chamber::large_volume()));
            rel.right.push_back(make_term(1, fs));
            if (++count > limits.max_terms) throw Error(ErrorKind::UnboundedSearch, "decompositions exceed max_terms");
          }
          chosen.pop_back();
          return;
        }
        Rational rest_upper = 0;
        for (size_t j = i + 1; j < ks.size(); ++j) {
          Rational cj = Rational(ks[j]) / h;
          rest_upper += upper(cj, q * cj);
        }
        Rational lo = remaining - rest_upper, hi = upper(c, s);
        if (i > 0 && ks[i] == ks[i - 1] && chosen.back().d < hi) hi = chosen.back().d;
        Rational off = ch3_offset(0, c, s, X);
        Integer jlo = ceil_of(lo * h + off), jhi = floor_of(hi * h + off);
        for (Integer j = jlo; j <= jhi; ++j) {
          Rational d = (Rational(j) - off) / h;
          chosen.push_back({0, c, s, d});
          assign_d(ks, i + 1, remaining - d, chosen);
          chosen.pop_back();
        }
      };

  std::function<void(Integer, Integer)> partition = [&](Integer left, Integer max_part) {
    if (left == 0) {
      if (parts.size() < 2) return;
      for (const auto& k : parts)
        if (!integral_up_to_ch3(0, Rational(k) / h, q * Rational(k) / h, X)) return;
      std::vector<KClass> chosen;
      assign_d(parts, 0, v.d, chosen);
      return;
    }
    for (Integer k = std::min(left, max_part); k >= kmin; --k) {
      parts.push_back(k);
      partition(left - k, k);
      parts.pop_back();
    }
  };
  partition(total, total);
  rel.normalize();
  return rel;
}

Relation pt_bridge(const KClass& v, const ThreefoldModel& X) {
  require_calabi_yau(X);
  if (v.r != -1) throw Error(ErrorKind::NonMinusOneRank, "pt_bridge needs rank -1, got " + v.str());
  KClass u = ch_twist(v, v.c);  // (-1, 0, beta, -m)
  Rational h(X.h3);
  Relation rel;
  rel.left = InvariantSymbol::J_at(v, Chamber::large_volume());
  rel.right.push_back(make_term(Rational(X.tors), {InvariantSymbol::PT(u.s * h, -u.d * h)}));
  rel.provenance.push_back("rank -1 large-volume objects are derived duals of stable pairs, one per torsion line bundle");
  return rel;
}

Relation bridge_to_pt(const Relation& rel, const ThreefoldModel& X) {
  Relation out = rel;
  std::vector<InvariantSymbol> todo;
  for (const auto& t : rel.right)
    for (const auto& f : t.factors)
      if (f.kind == SymbolKind::J_at && f.chamber.kind == ChamberKind::large_volume && f.classes[0].r == -1)
        todo.push_back(f);
  for (const auto& sym : todo) out = substitute(out, sym, pt_bridge(sym.classes[0], X).right, 1u << 30);
  return out;
}

}  // namespace tiltwall
