#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polarity/convex.hpp"
#include "polarity/errors.hpp"
#include "polarity/scene.hpp"
#include "polarity/svg.hpp"
#include "polarity/verify.hpp"

namespace {

using namespace polarity;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitSolverFailure = 3;

struct Options {
  std::string scene_path;
  std::string out_path;
  std::string mode;
  std::string which = "harmonic";
  std::string body;
  std::string start;
  int samples = 100;
  long long seed = 1;
  int steps = 20;
};

Scene load_scene(const Options& opt) {
  Scene scene = opt.scene_path.empty() ? default_scene(2)
                                       : parse_scene_file(opt.scene_path);
  if (opt.mode == "exact") scene.float_mode = false;
  if (opt.mode == "float") scene.float_mode = true;
  return scene;
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + opt.out_path + "'");
  out << text;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int cmd_verify(const Options& opt) {
  const Scene scene = load_scene(opt);
  const Simplex& delta = scene.only_simplex();
  const VerifyReport report =
      verify_four_polarities(delta, opt.samples, static_cast<std::uint64_t>(opt.seed));
  std::ostringstream os;
  os << "dimension " << delta.dim() << ", samples " << report.samples << ", seed "
     << opt.seed << "\n";
  os << "rejected non-generic draws: " << report.rejections << "\n";
  for (const auto& m : report.mismatches) os << m;
  os << (report.all_equal()
             ? "all four polarities agree exactly on every sample\n"
             : "POLARITY MISMATCH\n");
  write_output(opt, os.str());
  return report.all_equal() ? 0 : kExitVerifyFailure;
}

ProjPoint figure_point(const Scene& scene) {
  if (auto it = scene.points.find("p"); it != scene.points.end()) return it->second;
  if (auto it = scene.points.find("unit"); it != scene.points.end()) return it->second;
  throw ParseError("figure needs a point named 'p' (or 'unit')");
}

int cmd_figure(const Options& opt) {
  const Scene scene = load_scene(opt);
  if (scene.dim != 2) throw UnsupportedDimension("figures need DIM 2");
  std::string svg;
  if (opt.which == "harmonic") {
    svg = svg_harmonic_figure(figure_point(scene), scene.only_simplex());
  } else if (opt.which == "circumconic") {
    svg = svg_circumconic_figure(figure_point(scene), scene.only_simplex());
  } else if (opt.which == "ruler") {
    auto named = [&](const std::string& name) -> const ProjPoint* {
      auto it = scene.points.find(name);
      return it == scene.points.end() ? nullptr : &it->second;
    };
    ProjPoint a(Vec{Scalar(0), Scalar(0), Scalar(1)});
    ProjPoint b(Vec{Scalar(2), Scalar(0), Scalar(1)});
    ProjPoint c(Vec{Scalar(1), Scalar(0), Scalar(1)});
    ProjPoint m(Vec{Scalar(0), Scalar(1), Scalar(1)});
    ProjPoint n(Vec{Scalar(1), Scalar(1), Scalar(2)});
    if (const auto* q = named("a")) a = *q;
    if (const auto* q = named("b")) b = *q;
    if (const auto* q = named("c")) c = *q;
    if (const auto* q = named("m")) m = *q;
    if (const auto* q = named("n")) n = *q;
    svg = svg_ruler_figure(ruler_trace(a, b, c, m, n));
  } else {
    throw ParseError("--which must be harmonic, ruler or circumconic");
  }
  write_output(opt, svg);
  return 0;
}

const ConvexPolytope& pick_body(const Scene& scene, const std::string& name,
                                std::optional<ConvexPolytope>& storage) {
  if (!name.empty()) return scene.polytope(name);
  if (scene.polytopes.size() == 1) return scene.polytopes.begin()->second;
  if (scene.polytopes.empty() && scene.simplices.size() == 1 && scene.dim == 2) {
    // Body from the scene's triangle, in a chart keeping all vertices finite
    // (the sum of the face forms misses every vertex).
    const Simplex& delta = scene.only_simplex();
    Vec inf(3, Scalar(0));
    for (std::size_t i = 0; i < 3; ++i) {
      const ProjHyperplane f = delta.face(i);
      for (std::size_t j = 0; j < 3; ++j) inf[j] += f.coeffs[j];
    }
    const AffineChart chart = chart_at_infinity(ProjHyperplane(std::move(inf)));
    std::vector<Vec> verts;
    for (const auto& v : delta.vertices) verts.push_back(to_chart(v, chart));
    storage.emplace(ConvexPolytope(chart, std::move(verts)));
    return *storage;
  }
  throw ParseError("give --body NAME to pick a polytope");
}

int cmd_santalo(const Options& opt) {
  const Scene scene = load_scene(opt);
  std::optional<ConvexPolytope> storage;
  const ConvexPolytope& body = pick_body(scene, opt.body, storage);
  if (!body.is_simplex() && !scene.float_mode)
    throw ParseError("non-simplex bodies need MODE float (or --mode float)");
  const SantaloResult res = santalo_point(body);
  std::ostringstream os;
  os << "santalo point: (" << num(res.point[0]) << ", " << num(res.point[1]) << ")\n";
  os << "dual centroid norm: " << num(res.gradient_norm) << "\n";
  os << "newton iterations: " << res.iterations << "\n";
  write_output(opt, os.str());
  return 0;
}

int cmd_orbit(const Options& opt) {
  const Scene scene = load_scene(opt);
  std::optional<ConvexPolytope> storage;
  const ConvexPolytope& body = pick_body(scene, opt.body, storage);
  if (!body.is_simplex() && !scene.float_mode)
    throw ParseError("non-simplex bodies need MODE float (or --mode float)");
  Vec x0 = centroid(body);
  if (!opt.start.empty()) {
    std::string inner = opt.start;
    if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')')
      inner = inner.substr(1, inner.size() - 2);
    for (auto& ch : inner)
      if (ch == ',') ch = ' ';
    std::istringstream is(inner);
    std::string tok;
    Vec parsed;
    while (is >> tok) parsed.push_back(scalar_from_string(tok));
    if (parsed.size() != body.dim()) throw ParseError("bad --start point");
    x0 = std::move(parsed);
  }
  const auto orbit = double_polar_orbit(body, x0, opt.steps);
  std::ostringstream os;
  os << "step,x,y,displacement\n";
  for (const auto& st : orbit)
    os << st.step << ',' << num(st.x[0]) << ',' << num(st.x[1]) << ','
       << num(st.displacement) << "\n";
  write_output(opt, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective polarities with respect to a simplex"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scene", opt.scene_path, "scene file (default: standard triangle)");
    sub->add_option("--out", opt.out_path, "output path (default: stdout)");
    sub->add_option("--mode", opt.mode, "exact|float, overrides the scene's MODE")
        ->check(CLI::IsMember({"exact", "float"}));
  };
  CLI::App* verify = app.add_subcommand("verify", "check the four polarities agree");
  add_common(verify);
  verify->add_option("--samples", opt.samples, "random generic points to test");
  verify->add_option("--seed", opt.seed, "random seed");
  CLI::App* figure = app.add_subcommand("figure", "emit an SVG construction figure");
  add_common(figure);
  figure->add_option("--which", opt.which, "harmonic|ruler|circumconic")
      ->check(CLI::IsMember({"harmonic", "ruler", "circumconic"}));
  CLI::App* santalo = app.add_subcommand("santalo", "find the Santalo point of a body");
  add_common(santalo);
  santalo->add_option("--body", opt.body, "polytope name");
  CLI::App* orbit = app.add_subcommand("orbit", "iterate the double polar map");
  add_common(orbit);
  orbit->add_option("--body", opt.body, "polytope name");
  orbit->add_option("--start", opt.start, "start point, e.g. (1/2,1/3)");
  orbit->add_option("--steps", opt.steps, "iterations");
  orbit->add_option("--samples", opt.samples)->group("");  // accepted, unused
  orbit->add_option("--seed", opt.seed)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (figure->parsed()) return cmd_figure(opt);
    if (santalo->parsed()) return cmd_santalo(opt);
    if (orbit->parsed()) return cmd_orbit(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const NoConvergence& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const polarity::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return 0;
}
