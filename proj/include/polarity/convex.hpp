#pragma once

#include <array>
#include <vector>

#include "polarity/projective.hpp"

namespace polarity {

/// Full-dimensional vertex-represented convex body in an affine chart.
/// Supported shapes: polygons (dimension 2) and simplices (any dimension).
/// Vertices are stored exactly; numeric routines convert to float64.
struct ConvexPolytope {
  AffineChart chart;
  std::vector<Vec> vertices;

  ConvexPolytope(AffineChart c, std::vector<Vec> verts);
  /// Polygon or simplex in the standard chart.
  static ConvexPolytope in_standard_chart(std::vector<Vec> verts);

  std::size_t dim() const { return chart.dim(); }
  bool is_simplex() const { return vertices.size() == dim() + 1; }
  bool contains_interior(const Vec& x) const;
};

/// Dual body K^x = {f | f(y - x) > -1 on the closure of K}, as a polytope of
/// linear-functional coordinates containing the origin.
struct DualBodyAt {
  Vec center;
  std::vector<Vec> dual_vertices;
};

Scalar volume(const ConvexPolytope& k);
Vec centroid(const ConvexPolytope& k);

DualBodyAt dual_body(const ConvexPolytope& k, const Vec& x);
Scalar dual_volume(const DualBodyAt& d);
Vec dual_centroid(const DualBodyAt& d);

/// n! * vol(K^x); proportional to the cone characteristic function on the
/// section through x.
Scalar characteristic_value(const ConvexPolytope& k, const Vec& x);

/// (n+1) * centroid(K^x): the negated gradient of log of the characteristic
/// function, as a dual affine point.
Vec theta(const ConvexPolytope& k, const Vec& x);

/// Float64 evaluation of vol(K^x), for solvers and oracles.
double dual_volume_at(const ConvexPolytope& k, const std::array<double, 2>& x);

struct SantaloResult {
  std::vector<double> point;
  double gradient_norm = 0;  // |centroid(K^x)| at the solution
  int iterations = 0;
};

/// Unique interior minimizer of vol(K^x), by damped Newton on log-volume with
/// the exact gradient -(n+1)*centroid(K^x) and finite-difference Hessian.
SantaloResult santalo_point(const ConvexPolytope& k);

/// H^0: centroid of K in a chart sending H to infinity. Exact; chart choice is
/// deterministic and the result chart-independent.
ProjPoint convex_polar_hyperplane(const ProjHyperplane& h, const ConvexPolytope& k);

/// x^0 via the inverse-construction route: the dual of the Santalo point of
/// K^x. Round trip: the centroid of K in a chart sending the result to
/// infinity is x (up to solver tolerance).
ProjHyperplane convex_polar_point(const ProjPoint& x, const ConvexPolytope& k);

/// x^{*0*}: the dual of the centroid of K^x. This is the involution candidate
/// iterated by the double-polar dynamics; it differs from convex_polar_point
/// on bodies whose Santalo point is not the dual centroid.
ProjHyperplane dual_centroid_polar(const ProjPoint& x, const ConvexPolytope& k);

/// Exact simplex paths: the polarity with respect to the simplex component
/// containing p (resp. avoiding h), computed with rational arithmetic.
ProjHyperplane simplex_convex_polar_point(const ProjPoint& p, const Simplex& delta);
ProjPoint simplex_convex_polar_hyperplane(const ProjHyperplane& h, const Simplex& delta);

struct OrbitStep {
  int step = 0;
  std::array<double, 2> x{0, 0};
  double displacement = 0;
};

/// Iterates x -> x^{00} (dual-centroid polar, then hyperplane polar).
/// Simplices take the exact path and stay fixed; general polygons use float64.
std::vector<OrbitStep> double_polar_orbit(const ConvexPolytope& k, const Vec& x0,
                                          int steps);

}  // namespace polarity
