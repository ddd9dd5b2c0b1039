#include "polarity/scene.hpp"

#include <fstream>
#include <sstream>

#include "polarity/errors.hpp"

namespace polarity {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

Vec parse_coords(std::istringstream& ls, std::size_t expected, int line) {
  Vec coords;
  std::string tok;
  while (ls >> tok) {
    try {
      coords.push_back(scalar_from_string(tok));
    } catch (const ParseError&) {
      fail(line, "bad rational '" + tok + "'");
    }
  }
  if (coords.size() != expected)
    fail(line, "expected " + std::to_string(expected) + " coordinates, got " +
                   std::to_string(coords.size()));
  return coords;
}

// "(x,y)" with rational entries.
Vec parse_vertex(const std::string& tok, std::size_t dim, int line) {
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
    fail(line, "bad vertex '" + tok + "'");
  std::string inner = tok.substr(1, tok.size() - 2);
  for (auto& ch : inner)
    if (ch == ',') ch = ' ';
  std::istringstream is(inner);
  Vec v;
  std::string part;
  while (is >> part) {
    try {
      v.push_back(scalar_from_string(part));
    } catch (const ParseError&) {
      fail(line, "bad vertex coordinate '" + part + "'");
    }
  }
  if (v.size() != dim) fail(line, "vertex dimension mismatch in '" + tok + "'");
  return v;
}

void check_fresh(const Scene& scene, const std::string& name, int line) {
  if (scene.points.count(name) || scene.hyperplanes.count(name) ||
      scene.polytopes.count(name) || scene.simplices.count(name))
    fail(line, "duplicate name '" + name + "'");
}

}  // namespace

const ProjPoint& Scene::point(const std::string& name) const {
  auto it = points.find(name);
  if (it == points.end()) throw ParseError("unknown point '" + name + "'");
  return it->second;
}

const ConvexPolytope& Scene::polytope(const std::string& name) const {
  auto it = polytopes.find(name);
  if (it == polytopes.end()) throw ParseError("unknown polytope '" + name + "'");
  return it->second;
}

const Simplex& Scene::simplex(const std::string& name) const {
  auto it = simplices.find(name);
  if (it == simplices.end()) throw ParseError("unknown simplex '" + name + "'");
  return it->second;
}

const Simplex& Scene::only_simplex() const {
  if (simplices.size() != 1)
    throw ParseError("scene must define exactly one simplex");
  return simplices.begin()->second;
}

Scene parse_scene(std::istream& in) {
  Scene scene;
  std::string raw;
  int lineno = 0;
  bool dim_seen = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "DIM") {
      int n = 0;
      if (!(ls >> n) || n < 2) fail(lineno, "DIM needs an integer >= 2");
      if (dim_seen) fail(lineno, "DIM given twice");
      dim_seen = true;
      scene.dim = static_cast<std::size_t>(n);
    } else if (tag == "MODE") {
      std::string mode;
      ls >> mode;
      if (mode == "exact")
        scene.float_mode = false;
      else if (mode == "float")
        scene.float_mode = true;
      else
        fail(lineno, "MODE must be exact or float");
    } else if (tag == "POINT" || tag == "HYPERPLANE") {
      std::string name;
      if (!(ls >> name)) fail(lineno, tag + " needs a name");
      check_fresh(scene, name, lineno);
      Vec coords = parse_coords(ls, scene.dim + 1, lineno);
      try {
        if (tag == "POINT") {
          scene.points.emplace(name, ProjPoint(std::move(coords)).canonical());
          scene.point_order.push_back(name);
        } else {
          scene.hyperplanes.emplace(name,
                                    ProjHyperplane(std::move(coords)).canonical());
        }
      } catch (const Error& e) {
        fail(lineno, e.what());
      }
    } else if (tag == "POLYTOPE") {
      std::string name;
      if (!(ls >> name)) fail(lineno, "POLYTOPE needs a name");
      check_fresh(scene, name, lineno);
      std::vector<Vec> verts;
      std::string tok;
      while (ls >> tok) verts.push_back(parse_vertex(tok, scene.dim, lineno));
      if (verts.size() < scene.dim + 1) fail(lineno, "too few vertices");
      try {
        scene.polytopes.emplace(name,
                                ConvexPolytope::in_standard_chart(std::move(verts)));
      } catch (const Error& e) {
        fail(lineno, e.what());
      }
    } else if (tag == "SIMPLEX") {
      std::string name;
      if (!(ls >> name)) fail(lineno, "SIMPLEX needs a name");
      check_fresh(scene, name, lineno);
      std::vector<ProjPoint> verts;
      std::string ref;
      while (ls >> ref) {
        auto it = scene.points.find(ref);
        if (it == scene.points.end()) fail(lineno, "unknown point '" + ref + "'");
        verts.push_back(it->second);
      }
      if (verts.size() != scene.dim + 1)
        fail(lineno, "simplex needs " + std::to_string(scene.dim + 1) + " points");
      try {
        scene.simplices.emplace(name, Simplex(std::move(verts)));
      } catch (const Error& e) {
        fail(lineno, e.what());
      }
    } else {
      fail(lineno, "unknown directive '" + tag + "'");
    }
  }
  return scene;
}

Scene parse_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scene file '" + path + "'");
  return parse_scene(in);
}

Scene default_scene(std::size_t dim) {
  std::ostringstream text;
  text << "DIM " << dim << "\nMODE exact\n";
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= dim; ++i) {
    const std::string name = "p" + std::to_string(i + 1);
    names.push_back(name);
    text << "POINT " << name;
    for (std::size_t j = 0; j <= dim; ++j) text << (j == i ? " 1" : " 0");
    text << "\n";
  }
  text << "POINT unit";
  for (std::size_t j = 0; j <= dim; ++j) text << " 1";
  text << "\nSIMPLEX delta";
  for (const auto& n : names) text << ' ' << n;
  text << "\n";
  std::istringstream in(text.str());
  return parse_scene(in);
}

}  // namespace polarity
