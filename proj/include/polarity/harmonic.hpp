#pragma once

#include <string>
#include <vector>

#include "polarity/projective.hpp"

namespace polarity {

/// Unique point p' with cr(a, b, c, p') = -1.
ProjPoint fourth_harmonic(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// p^#, computed by the recursive construction: u_i = H_i ∩ (p_i p), polars of
/// u_i inside the faces, all lying on one hyperplane. Base case n=1 is the
/// fourth harmonic.
ProjHyperplane harmonic_polar_point(const ProjPoint& p, const Simplex& delta);

/// p^# by the pairwise route: v_ij on the edge (p_i p_j), fourth harmonics
/// v'_ij of (p_i, p_j, v_ij), all on one hyperplane. Uses only span/meet and
/// fourth_harmonic on ambient points; cross-checks the recursive method.
ProjHyperplane harmonic_polar_point_pairwise(const ProjPoint& p, const Simplex& delta);

/// D^#: the n+1 spans (p_i, u_i) with u_i the harmonic conjugate on each face
/// triple are concurrent at the result.
ProjPoint harmonic_polar_hyperplane(const ProjHyperplane& d, const Simplex& delta);

/// Dimension-2 construction data: u_i = (p_i p) ∩ D_i and the harmonic
/// conjugates u'_i, indexed per the permutation convention (i,j,k).
struct HarmonicFigure {
  std::vector<ProjPoint> u;
  std::vector<ProjPoint> u_prime;
  ProjHyperplane polar;
};
HarmonicFigure harmonic_figure(const ProjPoint& p, const Simplex& delta);

/// One step of a straightedge construction.
struct TraceStep {
  enum class Kind { PickPoint, Join, Meet };
  Kind kind;
  std::string label;
  // PickPoint: the chosen point. Join/Meet: labels of the two arguments.
  ProjPoint point;
  std::string arg1, arg2;
  // Figure annotation: construction-order number of a drawn line (0 = none).
  int order = 0;
};

/// Replayable straightedge construction; every step references only earlier
/// labels.
struct ConstructionTrace {
  std::vector<TraceStep> steps;
  std::string result;

  /// Re-executes the joins and meets with exact arithmetic.
  ProjPoint replay_point() const;
  ProjHyperplane replay_line(const std::string& label) const;

  /// Line-oriented text format: `STEP <k> <kind> <label> <args...>`.
  std::string serialize() const;
  static ConstructionTrace deserialize(const std::string& text);
};

/// Complete-quadrangle construction of the fourth harmonic of (a,b,c) using
/// auxiliary points m (off the line) and n on (c m). The drawn lines carry
/// the order annotations 4,1,3,2.
ConstructionTrace ruler_trace(const ProjPoint& a, const ProjPoint& b,
                              const ProjPoint& c, const ProjPoint& m,
                              const ProjPoint& n);

}  // namespace polarity
