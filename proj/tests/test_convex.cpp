#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "polarity/convex.hpp"
#include "polarity/errors.hpp"
#include "polarity/frame.hpp"
#include "polarity/verify.hpp"

using namespace polarity;

namespace {

Vec v2(const char* x, const char* y) {
  return Vec{scalar_from_string(x), scalar_from_string(y)};
}

ConvexPolytope poly(std::initializer_list<std::pair<const char*, const char*>> vs) {
  std::vector<Vec> verts;
  for (const auto& [x, y] : vs) verts.push_back(v2(x, y));
  return ConvexPolytope::in_standard_chart(std::move(verts));
}

ConvexPolytope benoist_quad() {
  return poly({{"0", "0"}, {"2", "0"}, {"2", "1"}, {"0", "2"}});
}

// Chart with all vertices of the standard simplex finite, plus the component
// polytope of the simplex in it.
ConvexPolytope simplex_component(const Simplex& delta) {
  Vec inf(delta.vertices.size(), Scalar(0));
  for (std::size_t i = 0; i < delta.vertices.size(); ++i) {
    const ProjHyperplane f = delta.face(i);
    for (std::size_t j = 0; j < inf.size(); ++j) inf[j] += f.coeffs[j];
  }
  const AffineChart chart = chart_at_infinity(ProjHyperplane(std::move(inf)));
  std::vector<Vec> verts;
  for (const auto& v : delta.vertices) verts.push_back(to_chart(v, chart));
  return ConvexPolytope(chart, std::move(verts));
}

bool same_vertex_set(std::vector<Vec> a, std::vector<Vec> b) {
  if (a.size() != b.size()) return false;
  auto less = [](const Vec& p, const Vec& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < q[i]) return true;
      if (q[i] < p[i]) return false;
    }
    return false;
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

ConvexPolytope random_polygon(int nverts, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> jitter(-2, 2);
  while (true) {
    std::vector<Vec> verts;
    for (int i = 0; i < nverts; ++i) {
      const double ang = 2 * 3.14159265358979 * i / nverts;
      verts.push_back(Vec{Scalar(int(40 * std::cos(ang)) + jitter(rng)) / 10,
                          Scalar(int(40 * std::sin(ang)) + jitter(rng)) / 10});
    }
    try {
      return ConvexPolytope::in_standard_chart(std::move(verts));
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("volume and centroid") {
  const ConvexPolytope tri = poly({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  CHECK(volume(tri) == scalar_from_string("1/2"));
  CHECK(centroid(tri) == v2("1/3", "1/3"));

  const ConvexPolytope square = poly({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
  CHECK(volume(square) == Scalar(1));
  CHECK(centroid(square) == v2("1/2", "1/2"));

  const ConvexPolytope big = poly({{"0", "3"}, {"3", "0"}, {"-3", "-3"}});
  CHECK(volume(big) == scalar_from_string("27/2"));
  CHECK(centroid(big) == v2("0", "0"));

  CHECK_THROWS_AS(poly({{"0", "0"}, {"1", "0"}, {"2", "0"}, {"0", "1"}}),
                  DegenerateBody);
  CHECK(tri.contains_interior(v2("1/4", "1/4")));
  CHECK_FALSE(tri.contains_interior(v2("1", "1")));
  CHECK_FALSE(square.contains_interior(v2("0", "1/2")));
}

TEST_CASE("dual body") {
  const ConvexPolytope tri = poly({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  const DualBodyAt d = dual_body(tri, v2("1/3", "1/3"));
  CHECK(same_vertex_set(d.dual_vertices,
                        {v2("0", "3"), v2("3", "0"), v2("-3", "-3")}));
  CHECK(dual_volume(d) == scalar_from_string("27/2"));
  CHECK(dual_centroid(d) == v2("0", "0"));

  const ConvexPolytope square =
      poly({{"-1", "-1"}, {"1", "-1"}, {"1", "1"}, {"-1", "1"}});
  const DualBodyAt ds = dual_body(square, v2("0", "0"));
  CHECK(same_vertex_set(ds.dual_vertices,
                        {v2("1", "0"), v2("0", "1"), v2("-1", "0"), v2("0", "-1")}));
  CHECK(dual_volume(ds) == Scalar(2));

  // Homogeneity: scaling K and x by lambda scales the dual by 1/lambda.
  const ConvexPolytope tri3 = poly({{"0", "0"}, {"3", "0"}, {"0", "3"}});
  const DualBodyAt d3 = dual_body(tri3, v2("1", "1"));
  for (const auto& f : d3.dual_vertices) {
    Vec scaled{f[0] * 3, f[1] * 3};
    bool found = false;
    for (const auto& g : d.dual_vertices) found = found || g == scaled;
    CHECK(found);
  }

  CHECK_THROWS_AS(dual_body(tri, v2("1", "1")), NotInterior);
}

TEST_CASE("characteristic value and blow-up at the boundary") {
  const ConvexPolytope tri = poly({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  CHECK(characteristic_value(tri, v2("1/3", "1/3")) == Scalar(27));
  const ConvexPolytope square =
      poly({{"-1", "-1"}, {"1", "-1"}, {"1", "1"}, {"-1", "1"}});
  CHECK(characteristic_value(square, v2("0", "0")) == Scalar(4));

  // Approach the hypotenuse facet along the diagonal, starting past the
  // minimizer at the centroid: the value increases without bound.
  Scalar prev = characteristic_value(tri, v2("1/3", "1/3"));
  for (int k = 3; k <= 10; ++k) {
    const Scalar t = Scalar(1, 2) - Scalar(1, 1 << k);
    const Scalar value = characteristic_value(tri, Vec{t, t});
    CHECK(value > prev);
    prev = value;
  }
  CHECK(prev > Scalar(1000));
}

TEST_CASE("theta and the gradient of the characteristic function") {
  const ConvexPolytope tri = poly({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  CHECK(theta(tri, v2("1/3", "1/3")) == Vec{Scalar(0), Scalar(0)});
  const ConvexPolytope square =
      poly({{"-1", "-1"}, {"1", "-1"}, {"1", "1"}, {"-1", "1"}});
  CHECK(theta(square, v2("0", "0")) == Vec{Scalar(0), Scalar(0)});

  // theta = gradient of -log(characteristic value), by central differences.
  auto check_fd = [&](double x, double y) {
    const Vec th = theta(tri, Vec{Scalar(x), Scalar(y)});
    const double h = 1e-5;
    for (int j = 0; j < 2; ++j) {
      std::array<double, 2> p{x, y}, m{x, y};
      p[j] += h;
      m[j] -= h;
      const double fd =
          -(std::log(dual_volume_at(tri, p)) - std::log(dual_volume_at(tri, m))) /
          (2 * h);
      CHECK(std::fabs(fd - to_double(th[j])) <
            1e-5 * std::max(1.0, std::fabs(fd)));
    }
  };
  check_fd(0.3, 0.4);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 0.4);
  for (int trial = 0; trial < 10; ++trial) check_fd(u(rng), u(rng));
}

TEST_CASE("santalo point") {
  // Any triangle: the Santalo point is the centroid.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  int done = 0;
  while (done < 10) {
    std::vector<Vec> verts;
    for (int i = 0; i < 3; ++i) verts.push_back(Vec{Scalar(d(rng)), Scalar(d(rng))});
    try {
      const ConvexPolytope tri = ConvexPolytope::in_standard_chart(std::move(verts));
      const Vec c = centroid(tri);
      const SantaloResult res = santalo_point(tri);
      CHECK(res.iterations <= 50);
      CHECK(std::fabs(res.point[0] - to_double(c[0])) < 1e-8);
      CHECK(std::fabs(res.point[1] - to_double(c[1])) < 1e-8);
      ++done;
    } catch (const DegenerateBody&) {
    }
  }

  const ConvexPolytope square = poly({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
  const SantaloResult sq = santalo_point(square);
  CHECK(std::fabs(sq.point[0] - 0.5) < 1e-10);
  CHECK(std::fabs(sq.point[1] - 0.5) < 1e-10);

  // Quadrilateral: cross-check against a 200x200 grid search.
  const ConvexPolytope quad = benoist_quad();
  const SantaloResult qs = santalo_point(quad);
  double best = 1e300, bx = 0, by = 0;
  for (int i = 1; i < 200; ++i)
    for (int j = 1; j < 200; ++j) {
      const std::array<double, 2> x{2.0 * i / 200, 2.0 * j / 200};
      try {
        const double v = dual_volume_at(quad, x);
        if (v < best) {
          best = v;
          bx = x[0];
          by = x[1];
        }
      } catch (const NotInterior&) {
      }
    }
  CHECK(std::fabs(qs.point[0] - bx) < 1e-2);
  CHECK(std::fabs(qs.point[1] - by) < 1e-2);
  CHECK(dual_volume_at(quad, {qs.point[0], qs.point[1]}) <= best + 1e-9);
}

TEST_CASE("convex polar of a hyperplane") {
  const Simplex delta = Simplex::standard(2);
  const ConvexPolytope k = simplex_component(delta);
  CHECK(convex_polar_hyperplane(ProjHyperplane(Vec{Scalar(1), Scalar(1), Scalar(1)}),
                                k) == ProjPoint(Vec{Scalar(1), Scalar(1), Scalar(1)}));
  CHECK(convex_polar_hyperplane(ProjHyperplane(Vec{Scalar(6), Scalar(3), Scalar(2)}),
                                k) == ProjPoint(Vec{Scalar(1), Scalar(2), Scalar(3)}));
  // A hyperplane meeting the body is rejected.
  CHECK_THROWS_AS(convex_polar_hyperplane(
                      ProjHyperplane(Vec{Scalar(1), Scalar(-1), Scalar(0)}), k),
                  NotDisjoint);

  // Chart independence: the same triangle described in two charts.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjHyperplane h = random_generic_hyperplane(delta, rng);
    const ProjPoint expected = frame_polar_hyperplane(h, delta);
    // h avoids this component only for one sign pattern; skip the rest.
    ProjPoint got;
    try {
      got = convex_polar_hyperplane(h, k);
    } catch (const NotDisjoint&) {
      continue;
    }
    CHECK(got == expected);
  }

  // Two-chart test: the same body described in a different chart gives the
  // same polar point.
  const AffineChart other = chart_at_infinity(
      ProjHyperplane(Vec{Scalar(3), Scalar(1), Scalar(1)}));
  std::vector<Vec> verts2;
  for (const auto& v : delta.vertices) verts2.push_back(to_chart(v, other));
  const ConvexPolytope k2(other, std::move(verts2));
  for (int trial = 0; trial < 20; ++trial) {
    const ProjHyperplane h = random_generic_hyperplane(delta, rng);
    ProjPoint a, b;
    try {
      a = convex_polar_hyperplane(h, k);
      b = convex_polar_hyperplane(h, k2);
    } catch (const NotDisjoint&) {
      continue;
    }
    CHECK(a == b);
  }
}

TEST_CASE("convex polar point round trip") {
  // For random polygons and interior points, the centroid of K in a chart
  // sending x^0 to infinity is x.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> mix(0.1, 0.9);
  int bodies = 0;
  for (int nverts : {4, 5}) {
    for (int b = 0; b < 5; ++b) {
      const ConvexPolytope k = random_polygon(nverts, rng);
      const Vec c = centroid(k);
      for (int trial = 0; trial < 3; ++trial) {
        // Random interior point: blend the centroid toward a vertex.
        const double w = mix(rng);
        const std::size_t vi = b % k.vertices.size();
        Vec x{c[0] + Scalar(w) * (k.vertices[vi][0] - c[0]) * Scalar(7, 10),
              c[1] + Scalar(w) * (k.vertices[vi][1] - c[1]) * Scalar(7, 10)};
        const ProjPoint xp = from_chart(x, k.chart);
        const ProjHyperplane h = convex_polar_point(xp, k);
        const ProjPoint back = convex_polar_hyperplane(h, k);
        const Vec y = to_chart(back, k.chart);
        CHECK(std::fabs(to_double(y[0] - x[0])) < 1e-6);
        CHECK(std::fabs(to_double(y[1] - x[1])) < 1e-6);
      }
      ++bodies;
    }
  }
  CHECK(bodies == 10);
}

TEST_CASE("simplex convex polarity is exact and matches the frame polarity") {
  std::mt19937_64 rng(19);
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const Simplex delta = Simplex::standard(dim);
    for (int trial = 0; trial < 25; ++trial) {
      const ProjPoint p = random_generic_point(delta, rng);
      CHECK(simplex_convex_polar_point(p, delta) == frame_polar_point(p, delta));
      const ProjHyperplane h = random_generic_hyperplane(delta, rng);
      CHECK(simplex_convex_polar_hyperplane(h, delta) ==
            frame_polar_hyperplane(h, delta));
    }
  }
  // Point in a different component: the polarity is w.r.t. that component.
  const Simplex delta = Simplex::standard(2);
  const ProjPoint p(Vec{Scalar(-1), Scalar(1), Scalar(1)});
  CHECK(simplex_convex_polar_point(p, delta) == frame_polar_point(p, delta));
}

TEST_CASE("double polar orbit") {
  // Triangle: exactly fixed.
  const ConvexPolytope tri = poly({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  const auto fixed = double_polar_orbit(tri, v2("1/5", "3/10"), 5);
  for (const auto& st : fixed) CHECK(st.displacement == 0);
  CHECK(std::fabs(fixed.back().x[0] - 0.2) < 1e-15);

  // Square from the center: fixed point of the float path.
  const ConvexPolytope square =
      poly({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
  const auto sq = double_polar_orbit(square, v2("1/2", "1/2"), 5);
  for (const auto& st : sq) CHECK(st.displacement < 1e-8);

  // Benoist quadrilateral: visibly not involutive.
  const auto quad = double_polar_orbit(benoist_quad(), v2("8/9", "7/9"), 2);
  CHECK(quad[1].displacement > 1e-3);
}

TEST_CASE("monte carlo check of the dual volume integral") {
  // Integrating exp(-f(x,1)) over the dual cone of the standard triangle at
  // the centroid reproduces 2 * vol(K^x) = 27.
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u1(-45, 60), u3(0, 40);
  const double volume_box = 105.0 * 105.0 * 40.0;
  const int n = 4'000'000;
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    const double f1 = u1(rng), f2 = u1(rng), f3 = u3(rng);
    // Dual cone: nonnegative on the rays (0,0,1), (1,0,1), (0,1,1).
    if (f3 <= 0 || f1 + f3 <= 0 || f2 + f3 <= 0) continue;
    acc += std::exp(-(f1 / 3 + f2 / 3 + f3));
  }
  const double estimate = volume_box * acc / n;
  CHECK(std::fabs(estimate - 27.0) / 27.0 < 0.05);
}
