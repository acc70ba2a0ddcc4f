#include "tiltwall/plot.hpp"

#include <algorithm>
#include <set>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

constexpr long kWidth = 800, kHeight = 600, kSamples = 200;

const char* type_name(ElementType t) {
  switch (t) {
    case ElementType::parabola: return "parabola";
    case ElementType::region: return "region";
    case ElementType::line: return "line";
    case ElementType::point: return "point";
  }
  return "?";
}

ElementType type_from(const std::string& s) {
  for (auto t : {ElementType::parabola, ElementType::region, ElementType::line, ElementType::point})
    if (s == type_name(t)) return t;
  throw Error(ErrorKind::Parse, "unknown plot element '" + s + "'");
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Canvas {
  const PlotSpec& spec;
  std::string x(const Rational& b) const {
    return to_decimal((b - spec.b_min) * kWidth / (spec.b_max - spec.b_min), spec.precision);
  }
  std::string y(const Rational& w) const {
    return to_decimal(Rational(kHeight) - (w - spec.w_min) * kHeight / (spec.w_max - spec.w_min), spec.precision);
  }
  std::string pt(const Rational& b, const Rational& w) const { return x(b) + "," + y(w); }
  Rational sample(const Rational& lo, const Rational& hi, long i) const { return lo + (hi - lo) * i / kSamples; }
};

}  // namespace

void PlotSpec::validate() const {
  if (!(b_min < b_max) || !(w_min < w_max)) throw Error(ErrorKind::InvalidArgument, "plot ranges must be nonempty");
  if (precision < 0 || precision > 60) throw Error(ErrorKind::InvalidArgument, "precision must be in [0, 60]");
  std::set<std::string> labels;
  for (const auto& e : elements) {
    if (!e.label.empty() && !labels.insert(e.label).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate plot label '" + e.label + "'");
    if ((e.type == ElementType::line || e.type == ElementType::region) && !e.line)
      throw Error(ErrorKind::InvalidArgument, "plot element '" + e.label + "' needs a line");
    if (e.type == ElementType::region && e.line->vertical())
      throw Error(ErrorKind::InvalidArgument, "region boundary cannot be vertical");
    if (e.type == ElementType::point && !e.point)
      throw Error(ErrorKind::InvalidArgument, "plot element '" + e.label + "' needs a point");
  }
}

PlotSpec plot_spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "plot spec must be an object");
  PlotSpec spec;
  if (j.contains("b_range")) {
    spec.b_min = rational_from_json(j.at("b_range").at(0));
    spec.b_max = rational_from_json(j.at("b_range").at(1));
  }
  if (j.contains("w_range")) {
    spec.w_min = rational_from_json(j.at("w_range").at(0));
    spec.w_max = rational_from_json(j.at("w_range").at(1));
  }
  if (j.contains("precision")) spec.precision = j.at("precision").get<int>();
  for (const auto& e : j.value("elements", Json::array())) {
    PlotElement el;
    el.type = type_from(e.at("type").get<std::string>());
    el.label = e.value("label", std::string());
    if (e.contains("line")) el.line = line_from_json(e.at("line"));
    if (e.contains("point")) el.point = point_from_json(e.at("point"));
    if (e.contains("right_of")) el.right_of = rational_from_json(e.at("right_of"));
    spec.elements.push_back(el);
  }
  spec.validate();
  return spec;
}

Json to_json(const PlotSpec& spec) {
  Json els = Json::array();
  for (const auto& e : spec.elements) {
    Json j = {{"type", type_name(e.type)}, {"label", e.label}};
    if (e.line) j["line"] = to_json(*e.line);
    if (e.point) j["point"] = to_json(*e.point);
    if (e.right_of) j["right_of"] = to_json(*e.right_of);
    els.push_back(j);
  }
  return {{"b_range", Json::array({to_json(spec.b_min), to_json(spec.b_max)})},
          {"w_range", Json::array({to_json(spec.w_min), to_json(spec.w_max)})},
          {"precision", spec.precision},
          {"elements", els}};
}

std::string render_svg(const PlotSpec& spec) {
  spec.validate();
  Canvas cv{spec};
  std::vector<PlotElement> els = spec.elements;
  std::stable_sort(els.begin(), els.end(), [](const PlotElement& a, const PlotElement& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.label < b.label;
  });

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) + "\" height=\"" +
         std::to_string(kHeight) + "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
  out += "<defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" + std::to_string(kWidth) + "\" height=\"" +
         std::to_string(kHeight) + "\"/></clipPath></defs>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" fill=\"white\"/>\n";
  out += "<g clip-path=\"url(#frame)\" font-family=\"serif\" font-size=\"14\">\n";

  if (spec.w_min <= 0 && 0 <= spec.w_max)
    out += "<line x1=\"" + cv.x(spec.b_min) + "\" y1=\"" + cv.y(0) + "\" x2=\"" + cv.x(spec.b_max) + "\" y2=\"" +
           cv.y(0) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (spec.b_min <= 0 && 0 <= spec.b_max)
    out += "<line x1=\"" + cv.x(0) + "\" y1=\"" + cv.y(spec.w_min) + "\" x2=\"" + cv.x(0) + "\" y2=\"" +
           cv.y(spec.w_max) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  std::string para;
  for (long i = 0; i <= kSamples; ++i) {
    Rational b = cv.sample(spec.b_min, spec.b_max, i);
    para += (i ? " " : "") + cv.pt(b, b * b / 2);
  }
  out += "<polygon points=\"" + para + " " + cv.pt(spec.b_max, spec.w_max) + " " + cv.pt(spec.b_min, spec.w_max) +
         "\" fill=\"#e8e8e8\" stroke=\"none\"/>\n";

  for (const auto& e : els) {
    if (e.type != ElementType::region) continue;
    Rational lo = e.right_of ? std::max(*e.right_of, spec.b_min) : spec.b_min;
    if (lo >= spec.b_max) continue;
    std::string pts;
    for (long i = 0; i <= kSamples; ++i) {
      Rational b = cv.sample(lo, spec.b_max, i);
      Rational w = std::max(Rational(b * b / 2), e.line->w_at(b));
      pts += (i ? " " : "") + cv.pt(b, w);
    }
    out += "<polygon points=\"" + pts + " " + cv.pt(spec.b_max, spec.w_max) + " " + cv.pt(lo, spec.w_max) +
           "\" fill=\"#bdbdbd\" stroke=\"none\"><title>" + xml_escape(e.label) + "</title></polygon>\n";
  }

  out += "<polyline points=\"" + para + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  int points = 0;
  for (const auto& e : els) {
    if (e.type == ElementType::line) {
      const PlaneLine& l = *e.line;
      Rational b1, w1, b2, w2;
      if (l.vertical()) {
        b1 = b2 = rat(l.C(), l.A());
        w1 = spec.w_min;
        w2 = spec.w_max;
      } else {
        b1 = spec.b_min;
        b2 = spec.b_max;
        w1 = l.w_at(b1);
        w2 = l.w_at(b2);
      }
      out += "<line x1=\"" + cv.x(b1) + "\" y1=\"" + cv.y(w1) + "\" x2=\"" + cv.x(b2) + "\" y2=\"" + cv.y(w2) +
             "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      if (!e.label.empty()) {
        Rational lb = l.vertical() ? b1 : spec.b_min + (spec.b_max - spec.b_min) * 9 / 10;
        Rational lw = l.vertical() ? (spec.w_min + spec.w_max) / 2 : l.w_at(lb);
        lw = std::clamp(lw, spec.w_min, spec.w_max);
        out += "<text x=\"" + cv.x(lb) + "\" y=\"" + cv.y(lw) + "\">" + xml_escape(e.label) + "</text>\n";
      }
    } else if (e.type == ElementType::point) {
      out += "<circle cx=\"" + cv.x(e.point->b) + "\" cy=\"" + cv.y(e.point->w) + "\" r=\"3\" fill=\"black\"/>\n";
      if (!e.label.empty())
        out += "<text x=\"" + cv.x(e.point->b) + "\" y=\"" + cv.y(e.point->w) + "\" dx=\"6\" dy=\"" +
               (points % 2 ? "18" : "-6") + "\">" + xml_escape(e.label) + "</text>\n";
      ++points;
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

PlotSpec plot_walls(const std::vector<Wall>& walls) {
  PlotSpec spec;
  if (walls.empty()) return spec;
  Integer lo = walls.front().b1.floor(), hi = walls.front().b2.ceil();
  for (const auto& w : walls) {
    lo = std::min(lo, Integer(w.b1.floor()));
    hi = std::max(hi, Integer(w.b2.ceil()));
  }
  spec.b_min = Rational(lo - 1);
  spec.b_max = Rational(hi + 1);
  spec.w_min = 0;
  spec.w_max = std::max(spec.b_min * spec.b_min, spec.b_max * spec.b_max) / 2;
  for (size_t i = 0; i < walls.size(); ++i) {
    PlotElement e;
    e.type = ElementType::line;
    e.label = "wall " + std::to_string(i + 1);
    e.line = walls[i].line;
    spec.elements.push_back(e);
  }
  return spec;
}

PlotSpec plot_region(const KClass& v, const Rational& n0, const ThreefoldModel& X) {
  KClass w = v_n0(v, n0);
  PlaneLine lf = bg_line(w, X);
  auto [b1, b2] = parabola_roots(lf);
  Wall js = js_wall(w, n0, X);
  PlanePoint p = pi(w);
  PlotSpec spec;
  spec.b_min = std::min(Rational(b1.floor() - 2), Rational(p.b - 1));
  spec.b_max = Rational(b2.ceil() + 2);
  spec.w_min = 0;
  spec.w_max = std::max(spec.b_min * spec.b_min, spec.b_max * spec.b_max) / 2;
  spec.elements.push_back({ElementType::region, "U(v_n0)", lf, std::nullopt, p.b});
  spec.elements.push_back({ElementType::line, "l_f", lf, std::nullopt, std::nullopt});
  spec.elements.push_back({ElementType::line, "l_JS", js.line, std::nullopt, std::nullopt});
  spec.elements.push_back({ElementType::point, "Pi(v_n0)", std::nullopt, p, std::nullopt});
  spec.elements.push_back({ElementType::point, "Pi(O(-n0))", std::nullopt, pi(line_bundle(-n0)), std::nullopt});
  return spec;
}

}  // namespace tiltwall
