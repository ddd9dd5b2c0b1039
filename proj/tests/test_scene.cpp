#include <doctest.h>

#include <sstream>

#include "polarity/errors.hpp"
#include "polarity/scene.hpp"
#include "polarity/svg.hpp"

using namespace polarity;

namespace {

Scene parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scene(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("scene parsing") {
  const Scene s = parse(
      "# a triangle with a marked point\n"
      "DIM 2\n"
      "MODE exact\n"
      "POINT a 1 0 0\n"
      "POINT b 0 1 0\n"
      "POINT c 0 0 1\n"
      "POINT p 1/2 1/3 1\n"
      "HYPERPLANE h 6 3 2\n"
      "POLYTOPE quad (0,0) (2,0) (2,1) (0,2)\n"
      "SIMPLEX delta a b c\n");
  CHECK(s.dim == 2);
  CHECK_FALSE(s.float_mode);
  CHECK(s.point("p") == ProjPoint(Vec{Scalar(3), Scalar(2), Scalar(6)}));
  CHECK(s.hyperplanes.at("h").coeffs == Vec{Scalar(6), Scalar(3), Scalar(2)});
  CHECK(s.polytope("quad").vertices.size() == 4);
  CHECK(s.simplex("delta").dim() == 2);
  CHECK(&s.only_simplex() == &s.simplex("delta"));
  CHECK(s.point_order == std::vector<std::string>{"a", "b", "c", "p"});
}

TEST_CASE("scene errors carry line numbers") {
  CHECK(error_of("DIM 2\nPOINT p 1 2\n").find("line 2") == 0);
  CHECK(error_of("DIM 2\nPOINT p 1 2 1/0\n").find("line 2") == 0);
  CHECK(error_of("DIM 2\nPOINT p 1 2 3\nPOINT p 1 1 1\n").find("line 3") == 0);
  CHECK(error_of("WHAT now\n").find("line 1") == 0);
  CHECK(error_of("DIM 1\n").find("line 1") == 0);
  CHECK(error_of("DIM 2\nSIMPLEX s a b c\n").find("unknown point") !=
        std::string::npos);
  CHECK(error_of("DIM 2\nMODE sometimes\n").find("line 2") == 0);
  CHECK(error_of("DIM 2\nPOLYTOPE q (0,0) (1,0)\n").find("line 2") == 0);
  CHECK(error_of("DIM 2\nPOLYTOPE q (0,0) (1,0) (2,0) (0,1)\n")
            .find("convex") != std::string::npos);
}

TEST_CASE("float mode flag") {
  CHECK(parse("DIM 2\nMODE float\n").float_mode);
}

TEST_CASE("default scene") {
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const Scene s = default_scene(dim);
    CHECK(s.dim == dim);
    CHECK(s.only_simplex().dim() == dim);
    CHECK(s.point("unit") == ProjPoint(Vec(dim + 1, Scalar(1))));
  }
}

TEST_CASE("figures are deterministic and carry replayable traces") {
  const Simplex delta = Simplex::standard(2);
  const ProjPoint p(Vec{Scalar(1), Scalar(1), Scalar(1)});
  CHECK(svg_harmonic_figure(p, delta) == svg_harmonic_figure(p, delta));
  CHECK(svg_circumconic_figure(p, delta) == svg_circumconic_figure(p, delta));

  const ProjPoint a(Vec{Scalar(0), Scalar(0), Scalar(1)});
  const ProjPoint b(Vec{Scalar(2), Scalar(0), Scalar(1)});
  const ProjPoint c(Vec{Scalar(1), Scalar(0), Scalar(1)});
  const ProjPoint m(Vec{Scalar(0), Scalar(1), Scalar(1)});
  const ProjPoint n(Vec{Scalar(1), Scalar(1), Scalar(2)});
  const ConstructionTrace trace = ruler_trace(a, b, c, m, n);
  const std::string svg = svg_ruler_figure(trace);
  CHECK(svg == svg_ruler_figure(trace));

  // The embedded trace replays to the recorded harmonic point.
  const auto start = svg.find("STEP 1");
  const auto stop = svg.find("-->");
  REQUIRE(start != std::string::npos);
  REQUIRE(stop != std::string::npos);
  const ConstructionTrace embedded =
      ConstructionTrace::deserialize(svg.substr(start, stop - start));
  CHECK(embedded.replay_point() == fourth_harmonic(a, b, c));
}
