#include "tiltwall/io.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json opt_rational(const std::optional<Rational>& q) { return q ? to_json(*q) : Json(nullptr); }

template <class E>
E enum_from(const Json& j, std::initializer_list<E> values) {
  if (!j.is_string()) bad("expected an enum name");
  for (E e : values)
    if (j.get<std::string>() == name_of(e)) return e;
  bad("unknown value '" + j.get<std::string>() + "'");
}

}  // namespace

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const Rational& q) { return Json::array({to_json(q.get_num()), to_json(q.get_den())}); }

Json to_json(const ThreefoldModel& X) {
  return {{"name", X.name},   {"h3", to_json(X.h3)},         {"c2h", to_json(X.c2h)},
          {"tors", to_json(X.tors)}, {"cmin", to_json(X.cmin)}, {"calabi_yau", X.calabi_yau}};
}

Json to_json(const KClass& v) {
  return {{"r", to_json(v.r)}, {"c", to_json(v.c)}, {"s", to_json(v.s)}, {"d", to_json(v.d)}};
}

Json to_json(const PlanePoint& p) { return {{"b", to_json(p.b)}, {"w", to_json(p.w)}}; }

Json to_json(const PlaneLine& l) { return Json::array({to_json(l.A()), to_json(l.B()), to_json(l.C())}); }

Json to_json(const QuadNum& x) {
  return {{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"D", to_json(Rational(x.D()))}, {"decimal", x.to_decimal(12)}};
}

Json to_json(const Classification& c) {
  Json j = {{"case", name_of(c.kind)}, {"reason", c.reason}, {"shifted", nullptr}};
  if (c.shifted)
    j["shifted"] = {{"n_prime", to_json(c.shifted->n_prime)},
                    {"s_tilde", to_json(c.shifted->s_tilde)},
                    {"d_tilde", to_json(c.shifted->d_tilde)},
                    {"delta_n_prime", to_json(c.shifted->delta_n_prime)}};
  return j;
}

Json to_json(const Decomposition& d) {
  Json v0 = to_json(d.v0), v1 = to_json(d.v1);
  Json dp = to_json(d.d_prime);
  if (!d.ch3_resolved) {
    v0["d"] = nullptr;
    v1["d"] = nullptr;
    dp = nullptr;
  }
  return {{"v0", v0},
          {"v1", v1},
          {"c_prime", to_json(d.c_prime)},
          {"s_prime", to_json(d.s_prime)},
          {"d_prime", dp},
          {"ch3_resolved", d.ch3_resolved},
          {"classification", d.classification ? to_json(*d.classification) : Json(nullptr)}};
}

Json to_json(const Wall& w) {
  Json decs = Json::array();
  for (const auto& d : w.decompositions) decs.push_back(to_json(d));
  return {{"line", to_json(w.line)}, {"kind", name_of(w.kind)},    {"slope", to_json(w.slope)},
          {"b1", to_json(w.b1)},     {"b2", to_json(w.b2)},         {"crossing", to_json(w.crossing)},
          {"decompositions", decs},  {"status", "candidate"}};
}

Json to_json(const std::vector<Wall>& walls) {
  Json a = Json::array();
  for (const auto& w : walls) a.push_back(to_json(w));
  return a;
}

Json to_json(const SafeLine& s) {
  return {{"through", to_json(s.through)},
          {"slope", to_json(s.slope)},
          {"line", s.line ? to_json(*s.line) : Json(nullptr)},
          {"b1", to_json(s.b1)},
          {"b2", to_json(s.b2)}};
}

Json to_json(const CloseWitness& w) {
  return {{"n", to_json(w.n)},
          {"delta_n", to_json(w.delta_n)},
          {"s", to_json(w.s)},
          {"d", to_json(w.d)},
          {"bounds_report",
           {{"above_lf", w.bounds_report[0]},
            {"delta_n", w.bounds_report[1]},
            {"s", w.bounds_report[2]},
            {"d", w.bounds_report[3]}}},
          {"close", w.close}};
}

Json to_json(const InvariantSymbol& s) {
  Json j = {{"kind", name_of(s.kind)}, {"id", s.key()}};
  switch (s.kind) {
    case SymbolKind::J_at:
      j["class"] = to_json(s.classes.at(0));
      j["chamber"] = {{"kind", name_of(s.chamber.kind)},
                      {"line", s.chamber.line ? to_json(*s.chamber.line) : Json(nullptr)}};
      j["witness_b"] = opt_rational(s.witness_b);
      break;
    case SymbolKind::J_gieseker: j["class"] = to_json(s.classes.at(0)); break;
    case SymbolKind::PT:
      j["beta_h"] = to_json(s.beta_h);
      j["chi"] = to_json(s.chi);
      break;
    case SymbolKind::const_tors: break;
    case SymbolKind::placeholder_C: {
      Json args = Json::array(), mat = Json::array();
      for (const auto& c : s.classes) args.push_back(to_json(c));
      for (const auto& row : s.pairing) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(to_json(q));
        mat.push_back(r);
      }
      j["args"] = args;
      j["pairing"] = mat;
      break;
    }
  }
  return j;
}

Json to_json(const Term& t) {
  Json fs = Json::array();
  for (const auto& f : t.factors) fs.push_back(to_json(f));
  return {{"coef", to_json(t.coef)}, {"factors", fs}};
}

Json to_json(const Relation& r) {
  Json right = Json::array();
  for (const auto& t : r.right) right.push_back(to_json(t));
  return {{"left", to_json(r.left)}, {"right", right}, {"provenance", r.provenance}, {"text", r.str()}};
}

Json to_json(const Derivation& d) {
  Json steps = Json::array();
  for (const auto& s : d.steps)
    steps.push_back({{"tag", s.tag}, {"wall", s.wall ? to_json(*s.wall) : Json(nullptr)}, {"relation", to_json(s.relation)}});
  return {{"class", to_json(d.v)}, {"n0", to_json(d.n0)}, {"b_star", to_json(d.b_star)},
          {"steps", steps},        {"final", to_json(d.final)}};
}

Json to_json(const Dim1Wall& w) {
  Json ws = Json::array();
  for (const auto& [c0, s0] : w.witnesses) ws.push_back(Json::array({to_json(c0), to_json(s0)}));
  return {{"theta", to_json(w.theta)}, {"witnesses", ws}};
}

Json to_json(const ChamberReport& r) {
  Json walls = Json::array();
  for (const auto& w : r.walls) walls.push_back(to_json(w));
  return {{"theta_js", to_json(r.theta_js)},
          {"empty_chamber", Json::array({to_json(r.empty_chamber.first), to_json(r.empty_chamber.second)})},
          {"walls", walls},
          {"large_volume", r.large_volume},
          {"assumption", r.assumption}};
}

Json to_json(const Limits& l) {
  return {{"max_abs_rank", to_json(l.max_abs_rank)},
          {"max_denominator", to_json(l.max_denominator)},
          {"max_lattice_points", l.max_lattice_points},
          {"max_terms", l.max_terms},
          {"threads", l.threads},
          {"expand_depth", l.expand_depth}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) bad("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  bad("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) bad("rational must be [num, den]");
    Integer num = integer_from_json(j[0]), den = integer_from_json(j[1]);
    if (den == 0) bad("zero denominator");
    return rat(num, den);
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(integer_from_json(j));
}

ThreefoldModel model_from_json(const Json& j) {
  ThreefoldModel X;
  X.name = j.value("name", std::string("custom"));
  X.h3 = integer_from_json(field(j, "h3"));
  X.c2h = integer_from_json(field(j, "c2h"));
  X.tors = integer_from_json(field(j, "tors"));
  X.cmin = rational_from_json(field(j, "cmin"));
  const Json& cy = field(j, "calabi_yau");
  if (!cy.is_boolean()) bad("calabi_yau must be a boolean");
  X.calabi_yau = cy.get<bool>();
  try {
    X.validate();
  } catch (const Error& e) {
    bad(e.what());
  }
  return X;
}

KClass class_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 4) bad("class array must have four entries");
    return {integer_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
  }
  return {integer_from_json(field(j, "r")), rational_from_json(field(j, "c")), rational_from_json(field(j, "s")),
          rational_from_json(field(j, "d"))};
}

PlanePoint point_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
  return {rational_from_json(field(j, "b")), rational_from_json(field(j, "w"))};
}

PlaneLine line_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) bad("line must be [A, B, C]");
  try {
    return PlaneLine::make(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]));
  } catch (const Error& e) {
    bad(e.what());
  }
}

QuadNum quadnum_from_json(const Json& j) {
  return QuadNum::make(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")),
                       rational_from_json(field(j, "D")));
}

Classification classification_from_json(const Json& j) {
  Classification c;
  c.kind = enum_from(field(j, "case"), {ClassCase::js_wall_T_factor, ClassCase::close_descent, ClassCase::safe_descent,
                                        ClassCase::excluded});
  c.reason = field(j, "reason").get<std::string>();
  const Json& sh = field(j, "shifted");
  if (!sh.is_null())
    c.shifted = ShiftedClass{rational_from_json(field(sh, "n_prime")), rational_from_json(field(sh, "s_tilde")),
                             rational_from_json(field(sh, "d_tilde")), rational_from_json(field(sh, "delta_n_prime"))};
  return c;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.ch3_resolved = field(j, "ch3_resolved").get<bool>();
  auto cls = [&](const Json& x) {
    if (d.ch3_resolved) return class_from_json(x);
    return KClass{integer_from_json(field(x, "r")), rational_from_json(field(x, "c")), rational_from_json(field(x, "s")), 0};
  };
  d.v0 = cls(field(j, "v0"));
  d.v1 = cls(field(j, "v1"));
  d.c_prime = rational_from_json(field(j, "c_prime"));
  d.s_prime = rational_from_json(field(j, "s_prime"));
  d.d_prime = d.ch3_resolved ? rational_from_json(field(j, "d_prime")) : Rational(0);
  const Json& c = field(j, "classification");
  if (!c.is_null()) d.classification = classification_from_json(c);
  return d;
}

Wall wall_from_json(const Json& j) {
  Wall w;
  w.line = line_from_json(field(j, "line"));
  w.kind = enum_from(field(j, "kind"), {WallKind::joyce_song, WallKind::generic});
  w.slope = rational_from_json(field(j, "slope"));
  w.b1 = quadnum_from_json(field(j, "b1"));
  w.b2 = quadnum_from_json(field(j, "b2"));
  w.crossing = point_from_json(field(j, "crossing"));
  for (const auto& d : field(j, "decompositions")) w.decompositions.push_back(decomposition_from_json(d));
  return w;
}

std::vector<Wall> walls_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of walls");
  std::vector<Wall> out;
  for (const auto& w : j) out.push_back(wall_from_json(w));
  return out;
}

InvariantSymbol symbol_from_json(const Json& j) {
  SymbolKind k = enum_from(field(j, "kind"), {SymbolKind::J_at, SymbolKind::J_gieseker, SymbolKind::PT,
                                              SymbolKind::const_tors, SymbolKind::placeholder_C});
  InvariantSymbol s;
  s.kind = k;
  switch (k) {
    case SymbolKind::J_at: {
      s.classes = {class_from_json(field(j, "class"))};
      const Json& ch = field(j, "chamber");
      s.chamber.kind = enum_from(field(ch, "kind"), {ChamberKind::large_volume, ChamberKind::below, ChamberKind::above});
      if (!field(ch, "line").is_null()) s.chamber.line = line_from_json(ch.at("line"));
      if (!field(j, "witness_b").is_null()) s.witness_b = rational_from_json(j.at("witness_b"));
      break;
    }
    case SymbolKind::J_gieseker: s.classes = {class_from_json(field(j, "class"))}; break;
    case SymbolKind::PT:
      s.beta_h = rational_from_json(field(j, "beta_h"));
      s.chi = rational_from_json(field(j, "chi"));
      break;
    case SymbolKind::const_tors: break;
    case SymbolKind::placeholder_C:
      for (const auto& a : field(j, "args")) s.classes.push_back(class_from_json(a));
      for (const auto& row : field(j, "pairing")) {
        std::vector<Rational> r;
        for (const auto& q : row) r.push_back(rational_from_json(q));
        s.pairing.push_back(r);
      }
      break;
  }
  return s;
}

Relation relation_from_json(const Json& j) {
  Relation r;
  r.left = symbol_from_json(field(j, "left"));
  for (const auto& t : field(j, "right")) {
    Term term;
    term.coef = rational_from_json(field(t, "coef"));
    for (const auto& f : field(t, "factors")) term.factors.push_back(symbol_from_json(f));
    r.right.push_back(term);
  }
  for (const auto& p : field(j, "provenance")) r.provenance.push_back(p.get<std::string>());
  return r;
}

Derivation derivation_from_json(const Json& j) {
  Derivation d;
  d.v = class_from_json(field(j, "class"));
  d.n0 = rational_from_json(field(j, "n0"));
  d.b_star = rational_from_json(field(j, "b_star"));
  for (const auto& s : field(j, "steps")) {
    DerivationStep step;
    step.tag = field(s, "tag").get<std::string>();
    if (!field(s, "wall").is_null()) step.wall = wall_from_json(s.at("wall"));
    step.relation = relation_from_json(field(s, "relation"));
    d.steps.push_back(step);
  }
  d.final = relation_from_json(field(j, "final"));
  return d;
}

Limits limits_from_json(const Json& j, Limits base) {
  if (!j.is_object()) bad("limits must be a JSON object");
  for (const auto& [key, val] : j.items()) {
    if (key == "max_abs_rank") base.max_abs_rank = integer_from_json(val);
    else if (key == "max_denominator") base.max_denominator = integer_from_json(val);
    else if (key == "max_lattice_points") base.max_lattice_points = integer_from_json(val).get_ui();
    else if (key == "max_terms") base.max_terms = integer_from_json(val).get_ui();
    else if (key == "threads") base.threads = static_cast<unsigned>(integer_from_json(val).get_ui());
    else if (key == "expand_depth") base.expand_depth = static_cast<int>(integer_from_json(val).get_si());
    else bad("unknown limit '" + key + "'");
  }
  return base;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ThreefoldModel load_model(const std::string& spec) {
  if (spec == "quintic") return ThreefoldModel::quintic();
  return model_from_json(parse_json_text(read_file(spec)));
}

Json load_json_arg(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json_text(arg);
  return parse_json_text(read_file(arg));
}

Limits limits_from_env() {
  const char* env = std::getenv("TILTWALL_LIMITS");
  if (!env || !*env) return {};
  return limits_from_json(parse_json_text(env));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tiltwall
