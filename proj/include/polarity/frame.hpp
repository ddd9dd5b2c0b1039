#pragma once

#include <vector>

#include "polarity/projective.hpp"

namespace polarity {

/// n+2 points in general position: r_1, ..., r_{n+1}, r_+.
struct ProjFrame {
  std::vector<ProjPoint> points;

  explicit ProjFrame(std::vector<ProjPoint> pts);
  ProjFrame(const Simplex& simplex, const ProjPoint& unit);

  std::size_t dim() const { return points.size() - 2; }
  const ProjPoint& unit() const { return points.back(); }
};

/// Columns b_i with r_i = P(b_i) and r_+ = P(b_1 + ... + b_{n+1}); unique up
/// to one global scalar, pinned here by canonicalizing the first column.
struct AdaptedBasis {
  Mat columns;  // (n+1) x (n+1), column j is b_j
};

AdaptedBasis adapted_basis(const ProjFrame& frame);

/// Frame of P(V*) associated to the dual of an adapted basis. Its points are
/// returned as hyperplane coefficient tuples of P(V).
ProjFrame dual_frame(const ProjFrame& frame);

/// p^•: the hyperplane of equation x_1 + ... + x_{n+1} = 0 in the homogeneous
/// coordinates defined by (vertices of delta, p).
ProjHyperplane frame_polar_point(const ProjPoint& p, const Simplex& delta);

/// H^•: the dual construction, via the dual simplex (H_1^*, ..., H_{n+1}^*).
ProjPoint frame_polar_hyperplane(const ProjHyperplane& h, const Simplex& delta);

}  // namespace polarity
