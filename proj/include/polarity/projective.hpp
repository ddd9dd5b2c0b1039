#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polarity/linalg.hpp"
#include "polarity/scalar.hpp"

namespace polarity {

/// Homogeneous coordinate tuple up to nonzero scale. Canonical form: coprime
/// integers, first nonzero entry positive; equality of canonical forms is
/// plain tuple equality.
struct ProjPoint {
  Vec coords;

  ProjPoint() = default;
  explicit ProjPoint(Vec c);

  std::size_t dim() const { return coords.size() - 1; }  // projective dimension
  ProjPoint canonical() const;
  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;
};

/// Coefficients of a linear form, up to scale. Same canonical form as points;
/// kept as a distinct type so points of P(V) and P(V*) do not mix.
struct ProjHyperplane {
  Vec coeffs;

  ProjHyperplane() = default;
  explicit ProjHyperplane(Vec c);

  std::size_t dim() const { return coeffs.size() - 1; }
  ProjHyperplane canonical() const;
  bool operator==(const ProjHyperplane& o) const;
  bool operator!=(const ProjHyperplane& o) const { return !(*this == o); }
  std::string str() const;
};

/// Dual of a hyperplane, seen as a point of P(V*), and back.
ProjPoint dual_point(const ProjHyperplane& h);
ProjHyperplane dual_hyperplane(const ProjPoint& p);

ProjPoint canonicalize(const ProjPoint& p);

/// Exact incidence: sum of coeff_i * coord_i == 0.
bool incident(const ProjPoint& p, const ProjHyperplane& h);

/// Hyperplane spanned by n independent points of an n-dimensional space.
ProjHyperplane span(const std::vector<ProjPoint>& points);
/// Point common to n independent hyperplanes.
ProjPoint meet(const std::vector<ProjHyperplane>& hyperplanes);

bool collinear(const std::vector<ProjPoint>& points);

/// Element of K ∪ {∞}, used for cross-ratios on a line.
struct LineValue {
  bool infinite = false;
  Scalar value = 0;

  static LineValue infinity() { return LineValue{true, Scalar(0)}; }
  static LineValue finite(Scalar v) { return LineValue{false, std::move(v)}; }
  bool operator==(const LineValue& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  std::string str() const;
};

/// cr(a,b,c,d) = ((c-b)(d-a)) / ((c-a)(d-b)) in any affine chart of the line,
/// with the usual ∞ cancellation; cr(∞,0,1,-1) = -1.
LineValue cross_ratio(const ProjPoint& a, const ProjPoint& b,
                      const ProjPoint& c, const ProjPoint& d);

/// Affine chart: invertible matrix whose last row spans the infinity form.
/// Chart coordinates of p are y_i/y_{n+1} where y = basis * coords(p).
struct AffineChart {
  ProjHyperplane infinity;
  Mat basis;

  std::size_t dim() const { return basis.size() - 1; }
};

/// Standard chart x_{n+1} != 0 of an n-dimensional space.
AffineChart standard_chart(std::size_t dim);

/// Deterministic chart sending h to infinity: the coefficient row is completed
/// with standard basis rows, pivoting on its largest-magnitude entry.
AffineChart chart_at_infinity(const ProjHyperplane& h);

Vec to_chart(const ProjPoint& p, const AffineChart& chart);
ProjPoint from_chart(const Vec& affine, const AffineChart& chart);

/// n+1 points spanning the whole space.
struct Simplex {
  std::vector<ProjPoint> vertices;

  explicit Simplex(std::vector<ProjPoint> v);
  std::size_t dim() const { return vertices.size() - 1; }

  /// Matrix whose columns are vertex representatives.
  Mat vertex_matrix() const;
  /// Face H_i spanned by all vertices but the i-th.
  ProjHyperplane face(std::size_t i) const;
  /// p lies on no face.
  bool generic_point(const ProjPoint& p) const;
  /// h passes through no vertex.
  bool generic_hyperplane(const ProjHyperplane& h) const;

  static Simplex standard(std::size_t dim);
};

}  // namespace polarity
