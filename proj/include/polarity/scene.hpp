#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polarity/convex.hpp"
#include "polarity/projective.hpp"

namespace polarity {

/// Named geometric elements loaded from a line-oriented scene file:
///   DIM n
///   MODE exact|float
///   POINT name x1 x2 ...          (n+1 homogeneous rationals, a/b allowed)
///   HYPERPLANE name a1 a2 ...
///   POLYTOPE name (x,y) (x,y) ...  (affine vertices, standard chart)
///   SIMPLEX name p1 p2 ...         (n+1 point names)
/// `#` starts a comment; blank lines are ignored.
struct Scene {
  std::size_t dim = 2;
  bool float_mode = false;
  std::map<std::string, ProjPoint> points;
  std::map<std::string, ProjHyperplane> hyperplanes;
  std::map<std::string, ConvexPolytope> polytopes;
  std::map<std::string, Simplex> simplices;
  std::vector<std::string> point_order;  // insertion order, for reports

  const ProjPoint& point(const std::string& name) const;
  const ConvexPolytope& polytope(const std::string& name) const;
  const Simplex& simplex(const std::string& name) const;
  /// The scene's simplex when it has exactly one; errors otherwise.
  const Simplex& only_simplex() const;
};

/// Parses a scene; ParseError messages carry the 1-based line number.
Scene parse_scene(std::istream& in);
Scene parse_scene_file(const std::string& path);

/// Scene with the standard triangle/simplex and unit point, used when the CLI
/// is given no scene file.
Scene default_scene(std::size_t dim);

}  // namespace polarity
