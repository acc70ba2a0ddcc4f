#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tiltwall/errors.hpp"
#include "tiltwall/io.hpp"
#include "tiltwall/plot.hpp"

using namespace tiltwall;

namespace {

template <class F>
Json or_null(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return nullptr;
  }
}

void emit(const Json& j) { std::cout << dump(j); }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

void warn_li(const Wall& w) {
  if (!li_region(w.crossing.b, w.crossing.w))
    std::cerr << "warning: wall " << w.line.str() << " is probed at " << w.crossing.str()
              << ", outside the region where the BG-type inequality is known\n";
}

std::vector<Wall> li_filter(std::vector<Wall> walls, bool gate) {
  if (gate) {
    std::erase_if(walls, [](const Wall& w) { return !li_region(w.crossing.b, w.crossing.w); });
  } else {
    for (const auto& w : walls) warn_li(w);
  }
  return walls;
}

struct Common {
  std::string model = "quintic";
  std::string cls;
  std::optional<unsigned> threads;

  ThreefoldModel load() const {
    ThreefoldModel X = load_model(model);
    X.validate();
    return X;
  }
  KClass klass() const { return class_from_json(load_json_arg(cls)); }
  Limits limits() const {
    Limits l = limits_from_env();
    if (threads) l.threads = *threads;
    return l;
  }
};

Rational resolve_n0(const std::string& arg, const KClass& v, const ThreefoldModel& X) {
  if (arg == "auto") return minimal_admissible_n0(v, X);
  return parse_rational(arg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walls, wall-crossing relations and pictures in the tilt-stability plane of a threefold"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tiltwall 1.0.0");

  Common common;
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", common.model, "'quintic' or a model JSON file")->capture_default_str();
  };
  auto add_class = [&](CLI::App* sub, const char* help) {
    sub->add_option("--class", common.cls, help)->required();
  };

  // model
  auto* model = app.add_subcommand("model", "Threefold model data");
  model->require_subcommand(1);
  std::string model_arg = "quintic";
  auto* model_validate = model->add_subcommand("validate", "Check a model file");
  model_validate->add_option("model", model_arg, "'quintic' or a model JSON file")->required();
  auto* model_info = model->add_subcommand("info", "Print a model and derived data");
  model_info->add_option("model", model_arg, "'quintic' or a model JSON file")->capture_default_str();

  // class
  auto* klass = app.add_subcommand("class", "Chern character data");
  klass->require_subcommand(1);
  auto* class_info = klass->add_subcommand("info", "Invariants of a class");
  add_class(class_info, "class as {r,c,s,d}, [r,c,s,d] or a JSON file");
  add_model(class_info);

  // walls
  auto* walls = app.add_subcommand("walls", "Numerical walls of a class");
  add_class(walls, "class as {r,c,s,d}, [r,c,s,d] or a JSON file");
  add_model(walls);
  std::string above, right_of, n_arg = "0", n0_arg;
  bool strict = false, sheaf = false, resolve = false, li_gate = false;
  walls->add_option("--above", above, "line [A,B,C]; keep walls on or above it");
  walls->add_option("--right-of", right_of, "keep walls reaching b > this value");
  walls->add_flag("--strict", strict, "drop the --above line itself");
  walls->add_flag("--sheaf", sheaf, "rank-zero factors need ch1 >= cmin");
  walls->add_flag("--resolve-ch3", resolve, "enumerate ch3 of the factors");
  walls->add_option("--n", n_arg, "twist used to report the rank -1 factor")->capture_default_str();
  walls->add_option("--n0", n0_arg, "classified walls of the twisted class v_n0 (N or 'auto')");
  walls->add_flag("--li-gate", li_gate, "drop walls probed outside the Li region instead of warning");
  walls->add_option("--threads", common.threads, "worker threads");

  // js-wall
  auto* jsw = app.add_subcommand("js-wall", "Joyce-Song wall of a rank -1 class w_n");
  add_class(jsw, "the class w_n");
  add_model(jsw);
  std::string js_n;
  jsw->add_option("--n", js_n, "twist n")->required();

  // safe-line
  auto* safe = app.add_subcommand("safe-line", "Safe line through Pi(v)");
  add_class(safe, "a rank -1 class");
  add_model(safe);
  std::string cap;
  safe->add_option("--cap", cap, "the cap C")->required();

  // dim1
  auto* dim1 = app.add_subcommand("dim1", "Walls for pairs with one-dimensional support");
  dim1->require_subcommand(1);
  std::string d1_c, d1_s, d1_n = "0", d1_bound = "0";
  auto* dim1_walls_cmd = dim1->add_subcommand("walls", "Walls in the theta line");
  auto* dim1_report = dim1->add_subcommand("report", "Chamber structure");
  for (auto* sub : {dim1_walls_cmd, dim1_report}) {
    sub->add_option("--c", d1_c, "ch2.H")->required();
    sub->add_option("--s", d1_s, "ch3")->required();
    sub->add_option("--n", d1_n, "twist n")->capture_default_str();
    sub->add_option("--bound", d1_bound, "constant lower bound for ch3 of quotients")->capture_default_str();
  }

  // derive
  auto* derive = app.add_subcommand("derive", "Wall-crossing derivation for a rank-zero class");
  add_class(derive, "rank-zero class v");
  add_model(derive);
  std::string derive_n0 = "auto";
  int expand = -1;
  bool pt = false, skeleton = false;
  derive->add_option("--n0", derive_n0, "twist n0 (N or 'auto')")->capture_default_str();
  derive->add_option("--expand", expand, "substitution depth for symbols above walls");
  derive->add_flag("--pt", pt, "rewrite rank -1 large-volume symbols as stable pair invariants");
  derive->add_flag("--skeleton", skeleton, "print the Gieseker-to-tilt relation instead");
  derive->add_flag("--li-gate", li_gate, "fail on walls probed outside the Li region instead of warning");
  derive->add_option("--threads", common.threads, "worker threads");

  // plot
  auto* plot = app.add_subcommand("plot", "SVG picture of the (b,w)-plane");
  std::string spec_arg, walls_arg, plot_class, plot_n0, out_path, dump_spec;
  plot->add_option("--spec", spec_arg, "plot spec JSON or file");
  plot->add_option("--walls", walls_arg, "wall list JSON or file");
  plot->add_option("--class", plot_class, "rank-zero class; draws l_f, the Joyce-Song wall and U(v_n0)");
  plot->add_option("--n0", plot_n0, "twist n0 for --class (N or 'auto')");
  add_model(plot);
  plot->add_option("-o,--output", out_path, "output file (default stdout)");
  plot->add_option("--emit-spec", dump_spec, "also write the generated plot spec JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (model_validate->parsed()) {
      ThreefoldModel X = load_model(model_arg);
      X.validate();
      emit({{"valid", true}, {"model", to_json(X)}});
    } else if (model_info->parsed()) {
      ThreefoldModel X = load_model(model_arg);
      X.validate();
      KClass O = structure_sheaf();
      emit({{"model", to_json(X)},
            {"euler_O", to_json(euler(O, X))},
            {"hilbert_O", hilbert(O, X).str()},
            {"ch3_offset_O", to_json(ch3_offset(O.r, O.c, O.s, X))}});
    } else if (class_info->parsed()) {
      ThreefoldModel X = common.load();
      KClass v = common.klass();
      Json j = {{"class", to_json(v)},
                {"delta", to_json(delta(v, X))},
                {"euler", to_json(euler(v, X))},
                {"integral", integrality_check(v, X)}};
      j["hilbert"] = or_null([&]() -> Json { return hilbert(v, X).str(); });
      j["pi"] = or_null([&] { return to_json(pi(v)); });
      j["pi_prime"] = or_null([&] { return to_json(pi_prime(v)); });
      j["bg_line"] = or_null([&] { return to_json(bg_line(v, X)); });
      emit(j);
    } else if (walls->parsed()) {
      ThreefoldModel X = common.load();
      KClass v = common.klass();
      Limits L = common.limits();
      std::vector<Wall> result;
      if (!n0_arg.empty()) {
        result = destabilizing_walls(v, resolve_n0(n0_arg, v, X), X, L);
      } else {
        Region region;
        if (!above.empty()) region.above_line = line_from_json(load_json_arg(above));
        if (!right_of.empty()) region.right_of = parse_rational(right_of);
        region.strict = strict;
        WallOptions opt{sheaf, resolve, parse_rational(n_arg)};
        result = wall_candidates(v, region, X, L, opt);
      }
      emit(to_json(li_filter(std::move(result), li_gate)));
    } else if (jsw->parsed()) {
      ThreefoldModel X = common.load();
      emit(to_json(js_wall(common.klass(), parse_rational(js_n), X)));
    } else if (safe->parsed()) {
      ThreefoldModel X = common.load();
      emit(to_json(safe_line(common.klass(), parse_rational(cap), X)));
    } else if (dim1_walls_cmd->parsed() || dim1_report->parsed()) {
      Integer c(d1_c), s(d1_s), n(d1_n);
      Ch3Bound bound = constant_bound(parse_rational(d1_bound));
      if (dim1_walls_cmd->parsed()) {
        Json a = Json::array();
        for (const auto& w : dim1_walls(c, s, bound, n)) a.push_back(to_json(w));
        emit(a);
      } else {
        emit(to_json(chamber_report(c, s, n, bound)));
      }
    } else if (derive->parsed()) {
      ThreefoldModel X = common.load();
      KClass v = common.klass();
      Limits L = common.limits();
      if (expand >= 0) L.expand_depth = expand;
      require_calabi_yau(X);
      if (skeleton) {
        Relation rel = gieseker_tilt_skeleton(v, X, L);
        emit(to_json(pt ? bridge_to_pt(rel, X) : rel));
      } else {
        Derivation d = walk_walls(v, resolve_n0(derive_n0, v, X), X, L);
        for (const auto& step : d.steps) {
          if (!step.wall || li_region(step.wall->crossing.b, step.wall->crossing.w)) continue;
          if (li_gate)
            throw Error(ErrorKind::ModelAssumption,
                        "wall " + step.wall->line.str() + " is probed outside the Li region");
          warn_li(*step.wall);
        }
        if (pt) d.final = bridge_to_pt(d.final, X);
        emit(to_json(d));
      }
    } else if (plot->parsed()) {
      int sources = !spec_arg.empty() + !walls_arg.empty() + !plot_class.empty();
      if (sources > 1) throw Error(ErrorKind::InvalidArgument, "use one of --spec, --walls, --class");
      PlotSpec spec;
      if (!spec_arg.empty()) {
        spec = plot_spec_from_json(load_json_arg(spec_arg));
      } else if (!walls_arg.empty()) {
        spec = plot_walls(walls_from_json(load_json_arg(walls_arg)));
      } else if (!plot_class.empty()) {
        ThreefoldModel X = load_model(common.model);
        X.validate();
        KClass v = class_from_json(load_json_arg(plot_class));
        Rational n0 = plot_n0.empty() ? minimal_admissible_n0(v, X) : resolve_n0(plot_n0, v, X);
        spec = plot_region(v, n0, X);
      }
      if (!dump_spec.empty()) write_text(dump_spec, dump(to_json(spec)));
      write_text(out_path, render_svg(spec));
    }
  } catch (const Error& e) {
    std::cerr << dump({{"error", name_of(e.kind())}, {"message", e.what()}, {"partial", false}});
    return exit_code_for(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << dump({{"error", "Parse"}, {"message", e.what()}, {"partial", false}});
    return 1;
  } catch (const std::exception& e) {
    std::cerr << dump({{"error", "Internal"}, {"message", e.what()}, {"partial", false}});
    return 1;
  }
  return 0;
}
