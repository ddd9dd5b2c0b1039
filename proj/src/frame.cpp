#include "polarity/frame.hpp"

#include "polarity/errors.hpp"

namespace polarity {

ProjFrame::ProjFrame(std::vector<ProjPoint> pts) : points(std::move(pts)) {
  if (points.size() < 4) throw NotAFrame("frame needs n+2 >= 4 points");
  if (points.size() != points[0].coords.size() + 1) throw NotAFrame("point count != n+2");
  adapted_basis(*this);  // validates general position
}

ProjFrame::ProjFrame(const Simplex& simplex, const ProjPoint& unit)
    : ProjFrame([&] {
        auto pts = simplex.vertices;
        pts.push_back(unit);
        return pts;
      }()) {}

AdaptedBasis adapted_basis(const ProjFrame& frame) {
  const std::size_t n1 = frame.points.size() - 1;
  Mat base(n1, Vec(n1));
  for (std::size_t j = 0; j < n1; ++j) {
    if (frame.points[j].coords.size() != n1) throw NotAFrame("mixed dimensions");
    for (std::size_t i = 0; i < n1; ++i) base[i][j] = frame.points[j].coords[i];
  }
  Vec lambda;
  try {
    lambda = solve(base, frame.points.back().coords);
  } catch (const DegenerateSpan&) {
    throw NotAFrame("base points dependent");
  }
  for (const auto& l : lambda)
    if (is_zero(l)) throw NotAFrame("unit point on a face");
  Mat cols(n1, Vec(n1));
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t i = 0; i < n1; ++i) cols[i][j] = lambda[j] * base[i][j];
  // Pin the global scale: first column in canonical tuple form.
  Vec first(n1);
  for (std::size_t i = 0; i < n1; ++i) first[i] = cols[i][0];
  const Vec canon = ProjPoint(first).canonical().coords;
  std::size_t k = 0;
  while (is_zero(first[k])) ++k;
  const Scalar factor = canon[k] / first[k];
  for (auto& row : cols)
    for (auto& s : row) s *= factor;
  return AdaptedBasis{std::move(cols)};
}

ProjFrame dual_frame(const ProjFrame& frame) {
  const AdaptedBasis basis = adapted_basis(frame);
  const Mat inv = inverse(basis.columns);  // row i is the dual form of b_i
  std::vector<ProjPoint> duals;
  const std::size_t n1 = inv.size();
  Vec sum(n1, Scalar(0));
  for (std::size_t i = 0; i < n1; ++i) {
    duals.push_back(ProjPoint(inv[i]).canonical());
    for (std::size_t j = 0; j < n1; ++j) sum[j] += inv[i][j];
  }
  duals.push_back(ProjPoint(sum).canonical());
  return ProjFrame(std::move(duals));
}

ProjHyperplane frame_polar_point(const ProjPoint& p, const Simplex& delta) {
  if (!delta.generic_point(p)) throw NotGeneric("point on a face");
  const ProjFrame dual = dual_frame(ProjFrame(delta, p));
  return dual_hyperplane(dual.unit()).canonical();
}

ProjPoint frame_polar_hyperplane(const ProjHyperplane& h, const Simplex& delta) {
  if (!delta.generic_hyperplane(h)) throw NotGeneric("hyperplane through a vertex");
  std::vector<ProjPoint> dual_vertices;
  for (std::size_t i = 0; i < delta.vertices.size(); ++i)
    dual_vertices.push_back(dual_point(delta.face(i)));
  const Simplex dual_simplex(std::move(dual_vertices));
  const ProjHyperplane polar_in_dual = frame_polar_point(dual_point(h), dual_simplex);
  return dual_point(polar_in_dual).canonical();
}

}  // namespace polarity
