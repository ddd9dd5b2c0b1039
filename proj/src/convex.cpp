#include "polarity/convex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polarity/errors.hpp"

namespace polarity {

namespace {

// ---- exact polygon helpers (dimension 2) ----

Scalar cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Sorts vertices counterclockwise around their average and checks strict
// convex position.
std::vector<Vec> order_ccw(std::vector<Vec> verts) {
  const std::size_t m = verts.size();
  Vec o(2, Scalar(0));
  for (const auto& v : verts) {
    o[0] += v[0];
    o[1] += v[1];
  }
  o[0] /= int(m);
  o[1] /= int(m);
  auto half = [&](const Vec& v) {
    const Vec d = sub(v, o);
    if (sign(d[1]) > 0 || (is_zero(d[1]) && sign(d[0]) > 0)) return 0;
    return 1;
  };
  std::sort(verts.begin(), verts.end(), [&](const Vec& a, const Vec& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sign(cross2(sub(a, o), sub(b, o))) > 0;
  });
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& a = verts[i];
    const Vec& b = verts[(i + 1) % m];
    const Vec& c = verts[(i + 2) % m];
    if (sign(cross2(sub(b, a), sub(c, b))) <= 0)
      throw DegenerateBody("vertices not in strictly convex position");
  }
  return verts;
}

Scalar polygon_area(const std::vector<Vec>& v) {
  Scalar a(0);
  for (std::size_t i = 0; i < v.size(); ++i) a += cross2(v[i], v[(i + 1) % v.size()]);
  return a / 2;
}

Vec polygon_centroid(const std::vector<Vec>& v) {
  Scalar a(0);
  Vec c(2, Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec& p = v[i];
    const Vec& q = v[(i + 1) % v.size()];
    const Scalar w = cross2(p, q);
    a += w;
    c[0] += (p[0] + q[0]) * w;
    c[1] += (p[1] + q[1]) * w;
  }
  c[0] /= 3 * a;
  c[1] /= 3 * a;
  return c;
}

// ---- exact simplex helpers (any dimension) ----

Mat edge_matrix(const std::vector<Vec>& v) {
  const std::size_t n = v[0].size();
  Mat m(n, Vec(n));
  for (std::size_t j = 0; j + 1 < v.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = v[j + 1][i] - v[0][i];
  return m;
}

Scalar simplex_volume(const std::vector<Vec>& v) {
  Scalar d = determinant(edge_matrix(v));
  if (sign(d) < 0) d = -d;
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v[0].size()));
  return d / Scalar(f);
}

Vec average(const std::vector<Vec>& v) {
  Vec c(v[0].size(), Scalar(0));
  for (const auto& p : v)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (auto& s : c) s /= int(v.size());
  return c;
}

// Measures for a dual body (polygon in 2-D, simplex otherwise).
std::pair<Scalar, Vec> body_measures(std::vector<Vec> verts) {
  if (verts[0].size() == 2 && verts.size() > 3) {
    verts = order_ccw(std::move(verts));
    return {polygon_area(verts), polygon_centroid(verts)};
  }
  if (verts.size() == verts[0].size() + 1)
    return {simplex_volume(verts), average(verts)};
  throw UnsupportedDimension("only polygons and simplices are supported");
}

// ---- float64 polygon machinery for the Santalo solver ----

using P2 = std::array<double, 2>;
using PolyD = std::vector<P2>;

double crossd(const P2& a, const P2& b) { return a[0] * b[1] - a[1] * b[0]; }
P2 subd(const P2& a, const P2& b) { return {a[0] - b[0], a[1] - b[1]}; }

PolyD order_ccw_d(PolyD v) {
  P2 o{0, 0};
  for (const auto& p : v) {
    o[0] += p[0];
    o[1] += p[1];
  }
  o[0] /= v.size();
  o[1] /= v.size();
  std::sort(v.begin(), v.end(), [&](const P2& a, const P2& b) {
    return std::atan2(a[1] - o[1], a[0] - o[0]) < std::atan2(b[1] - o[1], b[0] - o[0]);
  });
  return v;
}

double aread(const PolyD& v) {
  double a = 0;
  for (std::size_t i = 0; i < v.size(); ++i) a += crossd(v[i], v[(i + 1) % v.size()]);
  return a / 2;
}

P2 centroidd(const PolyD& v) {
  double a = 0;
  P2 c{0, 0};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double w = crossd(v[i], v[(i + 1) % v.size()]);
    a += w;
    c[0] += (v[i][0] + v[(i + 1) % v.size()][0]) * w;
    c[1] += (v[i][1] + v[(i + 1) % v.size()][1]) * w;
  }
  c[0] /= 3 * a;
  c[1] /= 3 * a;
  return c;
}

bool interiord(const PolyD& v, const P2& x, double margin = 0.0) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const P2 e = subd(v[(i + 1) % v.size()], v[i]);
    const P2 d = subd(x, v[i]);
    if (crossd(e, d) <= margin) return false;
  }
  return true;
}

// Dual polygon K^x: one facet per vertex, adjacent vertex pairs give the
// dual's vertices.
PolyD dual_polygon_d(const PolyD& v, const P2& x) {
  PolyD out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const P2 a = subd(v[i], x);
    const P2 b = subd(v[(i + 1) % v.size()], x);
    const double det = crossd(a, b);
    // f . a = -1, f . b = -1
    out.push_back({(-b[1] + a[1]) / det, (b[0] - a[0]) / det});
  }
  if (aread(out) < 0) std::reverse(out.begin(), out.end());
  return out;
}

PolyD to_double_poly(const ConvexPolytope& k) {
  PolyD out;
  for (const auto& v : k.vertices) out.push_back({to_double(v[0]), to_double(v[1])});
  return order_ccw_d(std::move(out));
}

// ---- chart plumbing ----

// Representative lifts of the vertices into homogeneous ambient coordinates,
// with consistent orientation (all on the positive side of the chart).
std::vector<Vec> vertex_lifts(const ConvexPolytope& k) {
  std::vector<Vec> lifts;
  for (const auto& v : k.vertices) {
    Vec y(v);
    y.push_back(Scalar(1));
    lifts.push_back(solve(k.chart.basis, y));
  }
  return lifts;
}

Vec scalar_vec_from_doubles(const std::vector<double>& v) {
  Vec out;
  for (double d : v) out.emplace_back(d);  // exact binary-float to rational
  return out;
}

// Hyperplane with affine equation g . u = g . x - 1 in chart coordinates,
// pulled back to ambient coefficients.
ProjHyperplane affine_polar_hyperplane(const AffineChart& chart, const Vec& g,
                                       const Vec& x) {
  Vec form(g);
  form.push_back(1 - dot(g, x));
  return ProjHyperplane(vec_mat(form, chart.basis)).canonical();
}

}  // namespace

ConvexPolytope::ConvexPolytope(AffineChart c, std::vector<Vec> verts)
    : chart(std::move(c)), vertices(std::move(verts)) {
  const std::size_t n = chart.dim();
  if (n < 2) throw UnsupportedDimension("dimension must be at least 2");
  for (const auto& v : vertices)
    if (v.size() != n) throw DegenerateBody("vertex dimension mismatch");
  if (vertices.size() == n + 1) {
    if (is_zero(determinant(edge_matrix(vertices))))
      throw DegenerateBody("flat simplex");
  } else if (n == 2 && vertices.size() > 3) {
    vertices = order_ccw(std::move(vertices));
  } else {
    throw UnsupportedDimension("only polygons and simplices are supported");
  }
}

ConvexPolytope ConvexPolytope::in_standard_chart(std::vector<Vec> verts) {
  if (verts.empty()) throw DegenerateBody("no vertices");
  AffineChart chart = standard_chart(verts[0].size());
  return ConvexPolytope(std::move(chart), std::move(verts));
}

bool ConvexPolytope::contains_interior(const Vec& x) const {
  if (is_simplex()) {
    // Barycentric coordinates, all strictly positive.
    const std::size_t n = dim();
    Mat m(n + 1, Vec(n + 1, Scalar(1)));
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i < n; ++i) m[i][j] = vertices[j][i];
    Vec rhs(x);
    rhs.push_back(Scalar(1));
    for (const auto& l : solve(m, rhs))
      if (sign(l) <= 0) return false;
    return true;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vec e = sub(vertices[(i + 1) % vertices.size()], vertices[i]);
    if (sign(cross2(e, sub(x, vertices[i]))) <= 0) return false;
  }
  return true;
}

Scalar volume(const ConvexPolytope& k) {
  return k.is_simplex() ? simplex_volume(k.vertices) : polygon_area(k.vertices);
}

Vec centroid(const ConvexPolytope& k) {
  return k.is_simplex() ? average(k.vertices) : polygon_centroid(k.vertices);
}

DualBodyAt dual_body(const ConvexPolytope& k, const Vec& x) {
  if (!k.contains_interior(x)) throw NotInterior();
  DualBodyAt d{x, {}};
  if (k.is_simplex()) {
    const std::size_t n = k.dim();
    for (std::size_t skip = 0; skip <= n; ++skip) {
      Mat m;
      for (std::size_t j = 0; j <= n; ++j)
        if (j != skip) m.push_back(sub(k.vertices[j], x));
      d.dual_vertices.push_back(solve(m, Vec(n, Scalar(-1))));
    }
  } else {
    const std::size_t m = k.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      Mat sys{sub(k.vertices[i], x), sub(k.vertices[(i + 1) % m], x)};
      d.dual_vertices.push_back(solve(sys, Vec(2, Scalar(-1))));
    }
  }
  return d;
}

Scalar dual_volume(const DualBodyAt& d) { return body_measures(d.dual_vertices).first; }

Vec dual_centroid(const DualBodyAt& d) { return body_measures(d.dual_vertices).second; }

Scalar characteristic_value(const ConvexPolytope& k, const Vec& x) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k.dim()));
  return Scalar(f) * dual_volume(dual_body(k, x));
}

Vec theta(const ConvexPolytope& k, const Vec& x) {
  Vec c = dual_centroid(dual_body(k, x));
  for (auto& s : c) s *= int(k.dim()) + 1;
  return c;
}

double dual_volume_at(const ConvexPolytope& k, const std::array<double, 2>& x) {
  if (k.dim() != 2) throw UnsupportedDimension("float path is 2-D");
  const PolyD p = to_double_poly(k);
  if (!interiord(p, x)) throw NotInterior();
  return aread(dual_polygon_d(p, x));
}

SantaloResult santalo_point(const ConvexPolytope& k) {
  if (k.dim() != 2) throw UnsupportedDimension("solver is 2-D");
  const PolyD poly = to_double_poly(k);
  double scale = 0;
  for (const auto& v : poly)
    scale = std::max({scale, std::fabs(v[0]), std::fabs(v[1])});
  P2 x = centroidd(poly);
  auto grad = [&](const P2& p) -> P2 {  // gradient of log vol(K^x)
    const P2 g = centroidd(dual_polygon_d(poly, p));
    return {-3 * g[0], -3 * g[1]};
  };
  auto logvol = [&](const P2& p) { return std::log(aread(dual_polygon_d(poly, p))); };
  std::ostringstream iterates;
  for (int iter = 0; iter < 100; ++iter) {
    const P2 gbar = centroidd(dual_polygon_d(poly, x));
    const double gnorm = std::hypot(gbar[0], gbar[1]);
    iterates << "  iter " << iter << ": x=(" << x[0] << "," << x[1]
             << ") |centroid|=" << gnorm << "\n";
    if (gnorm < 1e-10) return {{x[0], x[1]}, gnorm, iter};
    const P2 g = grad(x);
    // Finite-difference Hessian of log vol.
    const double h = 1e-7 * std::max(1.0, scale);
    double H[2][2];
    for (int j = 0; j < 2; ++j) {
      P2 xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      const P2 gp = grad(xp), gm = grad(xm);
      H[0][j] = (gp[0] - gm[0]) / (2 * h);
      H[1][j] = (gp[1] - gm[1]) / (2 * h);
    }
    const double det = H[0][0] * H[1][1] - H[0][1] * H[1][0];
    P2 step{0, 0};
    bool newton_ok = std::isfinite(det) && std::fabs(det) > 1e-14;
    if (newton_ok) {
      step = {(-g[0] * H[1][1] + g[1] * H[0][1]) / det,
              (-g[1] * H[0][0] + g[0] * H[1][0]) / det};
      if (step[0] * g[0] + step[1] * g[1] > 0) newton_ok = false;  // not a descent step
    }
    if (!newton_ok) {
      const double n = std::hypot(g[0], g[1]);
      step = {-g[0] / n * 0.1 * scale, -g[1] / n * 0.1 * scale};
    }
    const double f0 = logvol(x);
    double t = 1;
    bool moved = false;
    while (t > 1e-14) {
      const P2 cand{x[0] + t * step[0], x[1] + t * step[1]};
      if (interiord(poly, cand) && logvol(cand) <= f0) {
        x = cand;
        moved = true;
        break;
      }
      t /= 2;
    }
    if (!moved)
      throw NoConvergence("Santalo solver stalled; iterates:\n" + iterates.str());
  }
  throw NoConvergence("Santalo solver exceeded iteration budget; iterates:\n" +
                      iterates.str());
}

ProjPoint convex_polar_hyperplane(const ProjHyperplane& h, const ConvexPolytope& k) {
  const std::vector<Vec> lifts = vertex_lifts(k);
  int side = 0;
  for (const auto& y : lifts) {
    const int s = sign(dot(h.coeffs, y));
    if (s == 0 || (side != 0 && s != side)) throw NotDisjoint();
    side = s;
  }
  const AffineChart target = chart_at_infinity(h);
  std::vector<Vec> images;
  for (const auto& y : lifts) {
    const Vec z = mat_vec(target.basis, y);
    Vec t(z.size() - 1);
    for (std::size_t i = 0; i + 1 < z.size(); ++i) t[i] = z[i] / z.back();
    images.push_back(std::move(t));
  }
  const Vec c = body_measures(std::move(images)).second;
  return from_chart(c, target);
}

ProjHyperplane dual_centroid_polar(const ProjPoint& x, const ConvexPolytope& k) {
  const Vec xa = to_chart(x, k.chart);
  const DualBodyAt d = dual_body(k, xa);
  return affine_polar_hyperplane(k.chart, dual_centroid(d), xa);
}

ProjHyperplane convex_polar_point(const ProjPoint& x, const ConvexPolytope& k) {
  if (k.is_simplex()) {
    // Dual of a simplex is a simplex, whose Santalo point is its centroid;
    // the exact dual-centroid route is the same map.
    return dual_centroid_polar(x, k);
  }
  const Vec xa = to_chart(x, k.chart);
  const DualBodyAt d = dual_body(k, xa);
  const auto dual_poly = ConvexPolytope::in_standard_chart(d.dual_vertices);
  const SantaloResult y = santalo_point(dual_poly);
  return affine_polar_hyperplane(k.chart, scalar_vec_from_doubles(y.point), xa);
}

ProjHyperplane simplex_convex_polar_point(const ProjPoint& p, const Simplex& delta) {
  if (!delta.generic_point(p)) throw NotGeneric("point on a face");
  const Mat vm = delta.vertex_matrix();
  const Vec y = solve(vm, p.coords);
  const std::size_t n1 = y.size();
  // Component of p: sign pattern of the vertex-basis coordinates. Flip the
  // vertex representatives so the component is the positive simplex.
  Mat w(vm);
  Vec lambda(n1);
  for (std::size_t j = 0; j < n1; ++j) {
    const int s = sign(y[j]);
    lambda[j] = s * y[j];
    if (s < 0)
      for (std::size_t i = 0; i < n1; ++i) w[i][j] = -w[i][j];
  }
  // Affine chart on the component: a_i = lambda_i / sum(lambda), i <= n; the
  // component is the standard affine simplex conv(e_1..e_n, 0).
  Scalar s(0);
  for (const auto& l : lambda) s += l;
  const std::size_t n = n1 - 1;
  std::vector<Vec> verts;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Scalar(0));
    e[i] = 1;
    verts.push_back(std::move(e));
  }
  verts.push_back(Vec(n, Scalar(0)));
  Vec xa(n);
  for (std::size_t i = 0; i < n; ++i) xa[i] = lambda[i] / s;
  const ConvexPolytope body = ConvexPolytope::in_standard_chart(std::move(verts));
  const Vec g = dual_centroid(dual_body(body, xa));
  // g . a = g . x - 1, homogenized in lambda, pulled back to ambient.
  const Scalar offset = dot(g, xa) - 1;
  Vec form(n1);
  for (std::size_t i = 0; i < n; ++i) form[i] = g[i] - offset;
  form[n] = -offset;
  return ProjHyperplane(vec_mat(form, inverse(w))).canonical();
}

ProjPoint simplex_convex_polar_hyperplane(const ProjHyperplane& h, const Simplex& delta) {
  if (!delta.generic_hyperplane(h)) throw NotGeneric("hyperplane through a vertex");
  const Mat vm = delta.vertex_matrix();
  // The unique component disjoint from h has vertices eps_i * p_i with
  // eps_i = sign(h(p_i)); its centroid in a chart sending h to infinity is the
  // average of the normalized vertex representatives.
  const std::size_t n1 = delta.vertices.size();
  Vec result(vm.size(), Scalar(0));
  for (std::size_t j = 0; j < n1; ++j) {
    Vec col(vm.size());
    for (std::size_t i = 0; i < vm.size(); ++i) col[i] = vm[i][j];
    const Scalar v = dot(h.coeffs, col);
    for (std::size_t i = 0; i < vm.size(); ++i) result[i] += col[i] / v;
  }
  return ProjPoint(result).canonical();
}

std::vector<OrbitStep> double_polar_orbit(const ConvexPolytope& k, const Vec& x0,
                                          int steps) {
  std::vector<OrbitStep> orbit;
  if (!k.contains_interior(x0)) throw NotInterior();
  if (k.is_simplex() && k.dim() == 2) {
    // Exact path: the double polar of a simplex point is the point itself.
    std::vector<ProjPoint> verts;
    for (const auto& v : k.vertices) verts.push_back(from_chart(v, k.chart));
    const Simplex delta(verts);
    ProjPoint x = from_chart(x0, k.chart);
    for (int i = 0; i <= steps; ++i) {
      const Vec xa = to_chart(x, k.chart);
      orbit.push_back({i, {to_double(xa[0]), to_double(xa[1])}, 0});
      if (i < steps)
        x = simplex_convex_polar_hyperplane(simplex_convex_polar_point(x, delta), delta);
    }
    return orbit;
  }
  if (k.dim() != 2) throw UnsupportedDimension("orbit float path is 2-D");
  const PolyD poly = to_double_poly(k);
  P2 x{to_double(x0[0]), to_double(x0[1])};
  orbit.push_back({0, x, 0});
  for (int i = 1; i <= steps; ++i) {
    const P2 g = centroidd(dual_polygon_d(poly, x));
    // Chart sending the polar line {g.(u-x) = -1} to infinity; the new point
    // is the centroid of K in that chart.
    const double c0 = 1 - (g[0] * x[0] + g[1] * x[1]);
    PolyD images;
    for (const auto& v : poly) {
      const double denom = g[0] * v[0] + g[1] * v[1] + c0;
      if (!(denom > 0)) throw NoConvergence("orbit left the body");
      images.push_back({v[0] / denom, v[1] / denom});
    }
    images = order_ccw_d(std::move(images));
    const P2 ct = centroidd(images);
    // Back from the chart: solve (I_2 | 0; g, c0)^(-1) applied to (ct, 1).
    const double denom = 1 - (g[0] * ct[0] + g[1] * ct[1]);
    if (!(std::fabs(denom) > 1e-300)) throw NoConvergence("orbit chart degenerated");
    const P2 nx{ct[0] * c0 / denom, ct[1] * c0 / denom};
    const double disp = std::hypot(nx[0] - x[0], nx[1] - x[1]);
    x = nx;
    orbit.push_back({i, x, disp});
    if (!interiord(poly, x)) throw NoConvergence("orbit left the body");
  }
  return orbit;
}

}  // namespace polarity
