#include "tiltwall/walls.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "tiltwall/errors.hpp"

namespace tiltwall {

const char* name_of(ClassCase c) {
  switch (c) {
    case ClassCase::js_wall_T_factor: return "js_wall_T_factor";
    case ClassCase::close_descent: return "close_descent";
    case ClassCase::safe_descent: return "safe_descent";
    case ClassCase::excluded: return "excluded";
  }
  return "?";
}

const char* name_of(WallKind k) { return k == WallKind::joyce_song ? "joyce_song" : "generic"; }

namespace {

struct Interval {
  std::optional<Rational> lo, hi;
  void at_least(const Rational& x) {
    if (!lo || x > *lo) lo = x;
  }
  void at_most(const Rational& x) {
    if (!hi || x < *hi) hi = x;
  }
  // a <= k*y <= b for k != 0
  void scaled_between(const Rational& k, const Rational& a, const Rational& b) {
    if (k > 0) {
      at_least(a / k);
      at_most(b / k);
    } else {
      at_least(b / k);
      at_most(a / k);
    }
  }
};

// Ch3 range for one factor: pinned value or an upper bound.
struct Ch3Constraint {
  std::optional<Rational> pinned;
  std::optional<Rational> upper;
};

struct Candidate {
  PlaneLine line;
  KClass v0, v1;  // ch3 not yet assigned
};

struct Task {
  Rational x;
  Integer r1;
  Integer jlo, jhi;
};

bool is_v0_orientation(const Integer& ra, const Rational& ca, const Rational& sa, const Integer& rb,
                       const Rational& cb, const Rational& sb) {
  bool za = ra == 0, zb = rb == 0;
  if (za != zb) return za;
  if (ra != rb) return ra < rb;
  return std::tie(ca, sa) < std::tie(cb, sb);
}

Integer ch2_lattice_den(const ThreefoldModel& X, const Integer& N) {
  Rational t = Rational(X.h3) / 6 + Rational(X.c2h) / 12;
  Integer L = lcm_of(2, t.get_den());
  return lcm_of(lcm_of(X.h3 * L, N * X.h3), 2 * N * N);
}

Ch3Constraint ch3_constraint(const KClass& u, const Rational& b0, const Rational& w0, bool sheaf_mode) {
  Ch3Constraint k;
  Rational r(u.r);
  Rational dp = u.c * u.c - 2 * r * u.s;
  Rational x = u.c - b0 * r;
  if (dp == 0 && u.r != 0) {
    k.pinned = u.c * u.s / (3 * r);
    return k;
  }
  k.upper = (dp * w0 - u.c * u.s * b0 + 2 * u.s * u.s) / (3 * x);
  if (sheaf_mode && u.r == 0) {
    Rational e = u.s * u.s / (2 * u.c) + u.c * u.c * u.c / 24;
    if (e < *k.upper) k.upper = e;
  }
  return k;
}

bool is_js_factor(const KClass& u, const ThreefoldModel& X) {
  return abs(u.r) == 1 && delta(u, X) == 0;
}

Decomposition make_dec(const KClass& v0, const KClass& v1, const Rational& n, bool resolved) {
  Decomposition dec;
  dec.v0 = v0;
  dec.v1 = v1;
  dec.c_prime = v1.c - n;
  dec.s_prime = v1.s + n * n / 2;
  dec.d_prime = v1.d - n * n * n / 6;
  dec.ch3_resolved = resolved;
  return dec;
}

void resolve_ch3(const Candidate& cand, const KClass& v, const Rational& b0, const Rational& w0,
                 const ThreefoldModel& X, const Limits& limits, const WallOptions& opt,
                 std::vector<Decomposition>& out) {
  Ch3Constraint k0 = ch3_constraint(cand.v0, b0, w0, opt.sheaf_mode);
  Ch3Constraint k1 = ch3_constraint(cand.v1, b0, w0, opt.sheaf_mode);
  Interval range;
  if (k0.pinned) {
    range.at_least(*k0.pinned);
    range.at_most(*k0.pinned);
  } else {
    range.at_most(*k0.upper);
  }
  if (k1.pinned) {
    range.at_least(v.d - *k1.pinned);
    range.at_most(v.d - *k1.pinned);
  } else {
    range.at_least(v.d - *k1.upper);
  }
  if (*range.lo > *range.hi) return;
  Rational h(X.h3);
  Rational off = ch3_offset(cand.v0.r, cand.v0.c, cand.v0.s, X);
  Integer klo = ceil_of(*range.lo * h + off), khi = floor_of(*range.hi * h + off);
  if (khi < klo) return;
  if (Integer(khi - klo) > Integer(static_cast<unsigned long>(limits.max_lattice_points)))
    throw Error(ErrorKind::UnboundedSearch, "ch3 range exceeds max_lattice_points");
  for (Integer kk = klo; kk <= khi; ++kk) {
    KClass a = cand.v0, b = cand.v1;
    a.d = (Rational(kk) - off) / h;
    b.d = v.d - a.d;
    if (!integrality_check(b, X)) continue;
    out.push_back(make_dec(a, b, opt.n, true));
  }
}

bool dec_less(const Decomposition& x, const Decomposition& y) {
  return std::tie(x.v0.c, x.v0.s, x.v0.d, x.v0.r) < std::tie(y.v0.c, y.v0.s, y.v0.d, y.v0.r);
}

}  // namespace

std::vector<Wall> wall_candidates(const KClass& v, const Region& region, const ThreefoldModel& X,
                                  const Limits& limits, const WallOptions& opt) {
  Rational dv = delta(v, X);
  if (dv < 0) throw Error(ErrorKind::NegativeDiscriminant, "wall_candidates needs Delta_H >= 0, got " + to_string(dv));
  if (v.r == 0 && v.c == 0 && v.s == 0) throw Error(ErrorKind::DegenerateClass, "ch<=2 of the class vanishes");
  if (v.r == 0 && v.c <= 0) throw Error(ErrorKind::DegenerateClass, "rank-zero class needs ch1 > 0");

  std::optional<PlaneLine> L = region.above_line;
  if (!L && v.r != 0) {
    if (dv == 0) return {};
    L = bg_line(v, X);
  }
  std::optional<std::pair<QuadNum, QuadNum>> chord;
  Rational b0;
  if (L) {
    if (L->vertical() || L->discriminant() <= 0) return {};
    chord = parabola_roots(*L);
    b0 = simplest_rational_between(chord->first, chord->second, limits.max_denominator);
  } else {
    b0 = v.s / v.c;
  }

  Rational r(v.r);
  Rational Xv = v.c - b0 * r;
  Rational Yv = v.s - b0 * v.c + b0 * b0 * r / 2;
  Rational dp = dv / Rational(X.h3 * X.h3);
  if (Xv <= 0) throw Error(ErrorKind::DegenerateClass, "class has ch1^b <= 0 at b = " + to_string(b0));

  Integer N = b0.get_den();
  Integer xden = lcm_of(X.h3, N);
  Integer Ds = ch2_lattice_den(X, N);
  if (Ds > limits.max_denominator || xden > limits.max_denominator)
    throw Error(ErrorKind::UnboundedSearch, "lattice denominator " + Ds.get_str() + " exceeds max_denominator");
  Rational M = std::max(Rational(Xv * Xv), dp) / 2;
  Integer R = abs(v.r) + floor_of(M * Rational(Ds)) + 1;
  if (R > limits.max_abs_rank) throw Error(ErrorKind::UnboundedSearch, "rank bound " + R.get_str() + " exceeds max_abs_rank");

  std::vector<Task> tasks;
  std::uint64_t total = 0;
  Rational dsq(Ds);
  for (Integer k = 1; rat(k, xden) < Xv; ++k) {
    Rational x = rat(k, xden);
    Rational x2 = Xv - x;
    for (Integer r1 = -R; r1 <= R; ++r1) {
      Integer r2 = v.r - r1;
      if (r1 == 0 && r2 == 0) continue;
      if (r1 == 0 && x * x >= dp) continue;
      if (r2 == 0 && x2 * x2 >= dp) continue;
      Interval iv;
      if (r1 != 0) iv.scaled_between(2 * Rational(r1), x * x - dp, x * x);
      if (r2 != 0) {
        // y1 = Yv - y2 with x2^2 - dp <= 2 r2 y2 <= x2^2
        Interval y2;
        y2.scaled_between(2 * Rational(r2), x2 * x2 - dp, x2 * x2);
        iv.at_least(Yv - *y2.hi);
        iv.at_most(Yv - *y2.lo);
      }
      // Delta_1 + Delta_2 <= Delta: 2 (r2 - r1) y1 <= dp - x^2 - x2^2 + 2 r2 Yv
      Rational slope = 2 * Rational(r2 - r1);
      Rational rhs = dp - x * x - x2 * x2 + 2 * Rational(r2) * Yv;
      if (slope > 0) iv.at_most(rhs / slope);
      else if (slope < 0) iv.at_least(rhs / slope);
      else if (rhs < 0) continue;
      if (!iv.lo || !iv.hi || *iv.lo > *iv.hi) continue;
      Integer jlo = ceil_of(*iv.lo * dsq), jhi = floor_of(*iv.hi * dsq);
      if (jhi < jlo) continue;
      Integer cnt = jhi - jlo + 1;
      if (!cnt.fits_ulong_p() || total + cnt.get_ui() > limits.max_lattice_points)
        throw Error(ErrorKind::UnboundedSearch, "candidate count exceeds max_lattice_points");
      total += cnt.get_ui();
      tasks.push_back({x, r1, jlo, jhi});
    }
  }

  auto work = [&](size_t begin, size_t step, std::vector<Candidate>& out) {
    for (size_t i = begin; i < tasks.size(); i += step) {
      const Task& t = tasks[i];
      Rational c1 = t.x + b0 * Rational(t.r1);
      Integer r2 = v.r - t.r1;
      Rational c2 = v.c - c1;
      for (Integer j = t.jlo; j <= t.jhi; ++j) {
        Rational y1 = rat(j, Ds);
        Rational s1 = y1 + b0 * c1 - b0 * b0 * Rational(t.r1) / 2;
        Rational s2 = v.s - s1;
        if (!is_v0_orientation(t.r1, c1, s1, r2, c2, s2)) continue;
        Rational d1 = c1 * c1 - 2 * Rational(t.r1) * s1;
        Rational d2 = c2 * c2 - 2 * Rational(r2) * s2;
        if (d1 < 0 || d2 < 0 || d1 >= dp || d2 >= dp || d1 + d2 > dp) continue;
        if (opt.sheaf_mode) {
          if (t.r1 == 0 && c1 < X.cmin) continue;
          if (r2 == 0 && c2 < X.cmin) continue;
        }
        if (!integral_up_to_ch3(t.r1, c1, s1, X)) continue;
        Rational A = v.s * Rational(t.r1) - s1 * r;
        Rational B = r * c1 - Rational(t.r1) * v.c;
        Rational C = v.s * c1 - s1 * v.c;
        if (B == 0) continue;
        PlaneLine line = PlaneLine::make(A, B, C);
        if (line.discriminant() <= 0) continue;
        auto [b1, b2] = parabola_roots(line);
        bool positive = true;
        for (const QuadNum* b : {&b1, &b2}) {
          if ((QuadNum(c1) - *b * Rational(t.r1)).sign() < 0 || (QuadNum(c2) - *b * Rational(r2)).sign() < 0)
            positive = false;
        }
        if (!positive) continue;
        if (L) {
          if (region.strict && line == *L) continue;
          if (side_at(line, *L, chord->first) == Side::below || side_at(line, *L, chord->second) == Side::below)
            continue;
        }
        if (region.right_of && !(b2 > QuadNum(*region.right_of))) continue;
        Rational w0 = line.w_at(b0);
        if (!in_U({b0, w0})) continue;
        out.push_back({line, KClass{t.r1, c1, s1, 0}, KClass{r2, c2, s2, 0}});
      }
    }
  };

  unsigned nthreads = std::max(1u, limits.threads);
  std::vector<std::vector<Candidate>> parts(nthreads);
  if (nthreads == 1) {
    work(0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, nthreads, parts[t]);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  std::map<PlaneLine, Wall> by_line;
  std::set<std::pair<PlaneLine, KClass>> seen;
  std::uint64_t terms = 0;
  for (auto& part : parts) {
    for (auto& cand : part) {
      if (!seen.insert({cand.line, cand.v0}).second) continue;
      auto it = by_line.find(cand.line);
      if (it == by_line.end()) {
        Wall w;
        w.line = cand.line;
        w.slope = cand.line.slope();
        std::tie(w.b1, w.b2) = parabola_roots(cand.line);
        w.crossing = {b0, cand.line.w_at(b0)};
        it = by_line.emplace(cand.line, std::move(w)).first;
      }
      Wall& wall = it->second;
      size_t before = wall.decompositions.size();
      if (opt.resolve_ch3) {
        resolve_ch3(cand, v, b0, wall.crossing.w, X, limits, opt, wall.decompositions);
      } else {
        Decomposition dec = make_dec(cand.v0, cand.v1, opt.n, false);
        dec.d_prime = 0;
        wall.decompositions.push_back(dec);
      }
      terms += wall.decompositions.size() - before;
      if (terms > limits.max_terms) throw Error(ErrorKind::UnboundedSearch, "decomposition count exceeds max_terms");
    }
  }

  std::vector<Wall> walls;
  for (auto& [line, wall] : by_line) {
    if (wall.decompositions.empty()) continue;
    std::sort(wall.decompositions.begin(), wall.decompositions.end(), dec_less);
    for (const auto& dec : wall.decompositions)
      if (is_js_factor(dec.v0, X) || is_js_factor(dec.v1, X)) wall.kind = WallKind::joyce_song;
    walls.push_back(std::move(wall));
  }
  std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
    if (a.slope != b.slope) return a.slope > b.slope;
    return a.line < b.line;
  });
  return walls;
}

bool rank0_no_walls_above(const KClass& v0, const PlaneLine& lf, const ThreefoldModel& X, const Limits& limits) {
  if (v0.r != 0) throw Error(ErrorKind::InvalidArgument, "rank0_no_walls_above needs a rank-zero class");
  Region region;
  region.above_line = lf;
  return wall_candidates(v0, region, X, limits).empty();
}

Wall js_wall(const KClass& w_n, const Rational& n, const ThreefoldModel& X) {
  if (w_n.r != -1) throw Error(ErrorKind::InvalidArgument, "js_wall needs a rank -1 class");
  Rational c = w_n.c - n;
  if (c <= 0) throw Error(ErrorKind::DegenerateClass, "js_wall needs ch1(w_n) - n > 0");
  KClass O = line_bundle(-n);
  PlanePoint p = pi(w_n), q = pi(O);
  Wall w;
  w.line = line_through(p, q);
  w.kind = WallKind::joyce_song;
  w.slope = w.line.slope();
  std::tie(w.b1, w.b2) = parabola_roots(w.line);
  Rational s = w_n.s + n * n / 2;
  if (w.b1 != QuadNum(-n) || w.b2 != QuadNum(n + 2 * s / c))
    throw std::logic_error("Joyce-Song wall endpoints disagree with -n and n + 2s/c");
  Rational mid = (w.b1.rational() + w.b2.rational()) / 2;
  w.crossing = {mid, w.line.w_at(mid)};
  w.decompositions.push_back(make_dec(w_n + O, -O, n, true));
  (void)X;
  return w;
}

Side SafeLine::side(const PlanePoint& p) const {
  QuadNum lw = slope * (p.b - through.b) + QuadNum(through.w);
  int s = (QuadNum(p.w) - lw).sign();
  return s > 0 ? Side::above : (s < 0 ? Side::below : Side::on);
}

SafeLine safe_line(const KClass& v, const Rational& cap, const ThreefoldModel& X) {
  if (v.r != -1) throw Error(ErrorKind::InvalidArgument, "safe_line needs a rank -1 class");
  if (cap <= 0) throw Error(ErrorKind::InvalidArgument, "safe_line needs cap > 0");
  if (delta(v, X) < 0) throw Error(ErrorKind::NegativeDiscriminant, "safe_line needs Delta_H >= 0");
  SafeLine out;
  out.through = pi(v);
  const PlanePoint& p = out.through;
  Rational dl = p.b * p.b - 2 * p.w;
  QuadNum u, R;
  if (dl <= 2 * cap * cap) {
    u = QuadNum::sqrt(9 * dl / 8);
    R = QuadNum::sqrt(dl / 8);
  } else {
    u = QuadNum((cap * cap + dl) / (2 * cap));
    R = u - QuadNum(cap);
  }
  out.slope = u + QuadNum(p.b);
  out.b1 = out.slope - R;
  out.b2 = out.slope + R;
  QuadNum lhs = u - R;
  QuadNum two_r = R * Rational(2);
  QuadNum rhs = QuadNum(cap) < two_r ? QuadNum(cap) : two_r;
  if (R * R != u * u - QuadNum(dl) || lhs != rhs) throw std::logic_error("safe line fails its defining equation");
  if (out.slope.is_rational()) out.line = PlaneLine::through(p, out.slope.rational());
  return out;
}

bool in_safe_area(const PlanePoint& p, const KClass& v, const Rational& cap, const ThreefoldModel& X) {
  SafeLine s = safe_line(v, cap, X);
  return p.b > s.through.b && s.side(p) == Side::above;
}

KClass v_n0(const KClass& v, const Rational& n0) { return v - line_bundle(-n0); }

CloseWitness close_to(const KClass& w_n, const KClass& v, const Rational& n0, const ThreefoldModel& X) {
  if (v.r != 0 || v.c <= 0) throw Error(ErrorKind::InvalidArgument, "close_to needs a rank-zero class with ch1 > 0");
  if (w_n.r != -1) throw Error(ErrorKind::InvalidArgument, "close_to needs a rank -1 class");
  CloseWitness cw;
  cw.base = v;
  cw.n0 = n0;
  cw.lf = bg_line(v_n0(v, n0), X);
  const Rational& c = v.c;
  Rational h(X.h3);
  Rational as0 = abs(v.s);
  cw.n = w_n.c - c;
  cw.delta_n = n0 - cw.n;
  cw.s = w_n.s + cw.n * cw.n / 2;
  cw.d = w_n.d - cw.n * cw.n * cw.n / 6;
  const Rational& dn = cw.delta_n;
  cw.bounds_report[0] = !cw.lf.vertical() && point_side(cw.lf, pi(w_n)) != Side::below;
  cw.bounds_report[1] = dn >= 0 && dn <= c / 3 && is_integer(dn * h);
  cw.bounds_report[2] = -n0 * dn - as0 <= cw.s && cw.s <= -Rational(3, 4) * n0 * dn + (c + as0 * h) * dn + v.s;
  Rational sh = v.s * h;
  cw.bounds_report[3] =
      cw.d >= Rational(15, 32) * n0 * n0 * dn - n0 * dn * (as0 * h + c) - dn * sh * sh + v.d;
  cw.close = std::all_of(cw.bounds_report.begin(), cw.bounds_report.end(), [](bool b) { return b; });
  return cw;
}

ShiftedClass shifted_class(const Rational& c, const Rational& cp, const Rational& sp, const Rational& dp,
                           const Rational& n, const Rational& delta_n) {
  if (!(cp > 0 && cp < c)) throw Error(ErrorKind::OutOfRange, "shifted_class needs 0 < c' < c");
  Rational e = c - cp;
  ShiftedClass out;
  out.n_prime = n - c + cp;
  out.s_tilde = sp - e * n + e * e / 2;
  out.d_tilde = dp + n * n * e / 2 - n * e * e / 2 + e * e * e / 6;
  out.delta_n_prime = delta_n + e;
  return out;
}

Classification classify_destabilizer(const KClass& w_n, const CloseWitness& params, const Wall& wall,
                                     const Decomposition& dec, const Rational& n0, const ThreefoldModel& X) {
  if (dec.v0 + dec.v1 != w_n && dec.ch3_resolved)
    throw Error(ErrorKind::InconsistentDecomposition, "factors do not sum to the class");
  if (!dec.ch3_resolved && (dec.v0.r + dec.v1.r != w_n.r || dec.v0.c + dec.v1.c != w_n.c || dec.v0.s + dec.v1.s != w_n.s))
    throw Error(ErrorKind::InconsistentDecomposition, "factors do not sum to the class");
  Classification out;
  const Rational& n = params.n;
  Rational c = w_n.c - n;
  Rational cp = dec.v1.c - n;
  Rational sp = dec.v1.s + n * n / 2;
  Rational dp = dec.v1.d - n * n * n / 6;
  auto excluded = [&](const std::string& why) {
    out.kind = ClassCase::excluded;
    out.reason = why;
    return out;
  };
  if (dec.v0.r != 0 || dec.v1.r != -1) return excluded("rank split is not (0, -1)");
  if (dec.v0.c <= 0) return excluded("rank-zero factor has ch1 <= 0");
  if (dec.v1.c < n0 - c / 3) return excluded("ch1 of the rank -1 factor is below n0 - c/3");
  if (dec.v0.c < X.cmin) return excluded("rank-zero factor has ch1 below cmin");
  if (cp < 0) return excluded("c' < 0");
  if (cp == 0) {
    if (params.delta_n == 0 && sp == 0 && (dp == 0 || !dec.ch3_resolved)) {
      out.kind = ClassCase::js_wall_T_factor;
      out.reason = "rank -1 factor is numerically O(-n)[1]";
      return out;
    }
    return excluded("c' = 0 away from the Joyce-Song configuration");
  }
  bool above_js = wall.slope > params.s / c;
  if (cp < params.delta_n + 2 * c / 3 || above_js) {
    QuadNum lhs = QuadNum(dec.v1.c) + wall.b1;
    QuadNum width = wall.b2 - wall.b1;
    QuadNum cap = QuadNum(c) < width ? QuadNum(c) : width;
    if (lhs < cap) {
      out.kind = ClassCase::safe_descent;
      out.reason = above_js ? "wall strictly above the Joyce-Song wall" : "c' < delta_n + 2c/3";
      return out;
    }
    return excluded("ch1(E1) + b1 >= min(c, b2 - b1)");
  }
  ShiftedClass sc = shifted_class(c, cp, sp, dp, n, params.delta_n);
  CloseWitness cw = close_to(dec.v1, params.base, n0, X);
  if (!cw.close) return excluded("rank -1 factor is not close to v_n0");
  if (!region_U_of(dec.v1, params.lf, wall.crossing)) return excluded("crossing point outside U(E1)");
  out.kind = ClassCase::close_descent;
  out.shifted = sc;
  out.reason = "rank -1 factor is close to v_n0";
  return out;
}

bool n0_admissible(const KClass& v, const Rational& n0, const ThreefoldModel& X) {
  if (v.r != 0 || v.c <= 0) throw Error(ErrorKind::InvalidArgument, "n0_admissible needs a rank-zero class with ch1 > 0");
  if (!is_integer(n0) || n0 < 1) return false;
  KClass w = v_n0(v, n0);
  if (delta(w, X) <= 0) return false;
  PlaneLine lf = bg_line(w, X);
  if (lf.vertical() || lf.discriminant() <= 0) return false;
  const Rational& c = v.c;
  Rational h(X.h3);
  Rational as0 = abs(v.s);
  if (!(lf.slope() > -n0 / 4 - as0 * h)) return false;
  auto [b1, b2] = parabola_roots(lf);
  if (!(b1 < QuadNum(-n0 + c / 3 + 1 / (3 * h)))) return false;
  QuadNum width = b2 - b1;
  Rational K = Rational(5, 12) * c + 3 * as0 / (2 * c) + 1;
  if (!(width > QuadNum(c)) || !(width >= QuadNum(Rational(3, 2) * n0 - K))) return false;
  if (!(b2 - b1 * Rational(2) > QuadNum(n0 + c))) return false;
  Rational lattice_ceil = Rational((-b1 * h).ceil()) / h;
  return lattice_ceil >= n0 - c / 3;
}

Rational minimal_admissible_n0(const KClass& v, const ThreefoldModel& X) {
  Integer hi = 1;
  Integer lo = 0;
  while (!n0_admissible(v, Rational(hi), X)) {
    lo = hi;
    hi *= 2;
    if (hi > Integer(1) << 40) throw Error(ErrorKind::UnboundedSearch, "no admissible n0 below 2^40");
  }
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (n0_admissible(v, Rational(mid), X)) hi = mid;
    else lo = mid;
  }
  return Rational(hi);
}

std::vector<Wall> destabilizing_walls(const KClass& v, const Rational& n0, const ThreefoldModel& X, const Limits& limits) {
  KClass w = v_n0(v, n0);
  Region region;
  region.above_line = bg_line(w, X);
  region.right_of = pi(w).b;
  WallOptions opt;
  opt.sheaf_mode = true;
  opt.resolve_ch3 = true;
  opt.n = n0;
  std::vector<Wall> walls = wall_candidates(w, region, X, limits, opt);
  CloseWitness cw = close_to(w, v, n0, X);
  for (auto& wall : walls)
    for (auto& dec : wall.decompositions) dec.classification = classify_destabilizer(w, cw, wall, dec, n0, X);
  return walls;
}

}  // namespace tiltwall
