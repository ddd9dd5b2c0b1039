#include <doctest.h>

#include <random>

#include "polarity/errors.hpp"
#include "polarity/projective.hpp"

using namespace polarity;

namespace {

ProjPoint pt(std::initializer_list<const char*> cs) {
  Vec v;
  for (const char* c : cs) v.push_back(scalar_from_string(c));
  return ProjPoint(std::move(v));
}

ProjHyperplane hp(std::initializer_list<const char*> cs) {
  Vec v;
  for (const char* c : cs) v.push_back(scalar_from_string(c));
  return ProjHyperplane(std::move(v));
}

Mat random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  while (true) {
    Mat m(n, Vec(n));
    for (auto& row : m)
      for (auto& c : row) c = d(rng);
    if (!is_zero(determinant(m))) return m;
  }
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(pt({"2", "4", "6"}).canonical().coords == pt({"1", "2", "3"}).coords);
  CHECK(pt({"0", "-1", "-2"}).canonical().coords == pt({"0", "1", "2"}).coords);
  CHECK(pt({"1/2", "1/3", "0"}).canonical().coords == pt({"3", "2", "0"}).coords);
  CHECK(pt({"2", "4", "6"}) == pt({"1", "2", "3"}));
  const ProjPoint p = pt({"-3/7", "5", "0"});
  CHECK(p.canonical().canonical() == p.canonical());  // idempotent
  CHECK_THROWS_AS(ProjPoint(Vec{Scalar(0), Scalar(0)}), InvalidPoint);
}

TEST_CASE("span and meet") {
  CHECK(span({pt({"0", "1", "0"}), pt({"0", "0", "1"})}) == hp({"1", "0", "0"}));
  CHECK(meet({hp({"1", "0", "0"}), hp({"0", "1", "0"})}) == pt({"0", "0", "1"}));
  CHECK(span({pt({"1", "0", "0"}), pt({"1", "1", "1"})}) == hp({"0", "1", "-1"}));
  CHECK_THROWS_AS(span({pt({"1", "2", "3"}), pt({"2", "4", "6"})}), DegenerateSpan);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ProjPoint> pts;
    try {
      for (int i = 0; i < 3; ++i)
        pts.push_back(ProjPoint(
            Vec{Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))}));
      const ProjHyperplane h = span(pts);
      for (const auto& p : pts) CHECK(incident(p, h));
      // Adjunction: meet of the duals is the dual of the span.
      std::vector<ProjHyperplane> duals;
      for (const auto& p : pts) duals.push_back(dual_hyperplane(p));
      CHECK(meet(duals) == dual_point(h));
    } catch (const Error&) {
      continue;  // degenerate draw
    }
  }
}

TEST_CASE("duality involution") {
  const ProjPoint p = pt({"3", "-6", "9"});
  CHECK(dual_point(dual_hyperplane(p)) == p);
  const ProjHyperplane h = hp({"0", "5", "-1"});
  CHECK(dual_hyperplane(dual_point(h)) == h);
}

TEST_CASE("cross ratio convention") {
  // Points of the projective line: infinity = [1:0], finite t = [t:1].
  const ProjPoint inf = pt({"1", "0"});
  const ProjPoint zero = pt({"0", "1"});
  const ProjPoint one = pt({"1", "1"});
  const ProjPoint minus_one = pt({"-1", "1"});
  const ProjPoint two = pt({"2", "1"});

  CHECK(cross_ratio(inf, zero, one, minus_one) == LineValue::finite(-1));
  CHECK(cross_ratio(zero, two, one, inf) == LineValue::finite(-1));
  CHECK(cross_ratio(zero, two, one, one) == LineValue::finite(1));
  CHECK(cross_ratio(zero, one, two, one).infinite);
  CHECK_THROWS_AS(cross_ratio(zero, zero, one, two), DegenerateQuadruple);

  // Non-collinear quadruple in the plane.
  CHECK_THROWS_AS(cross_ratio(pt({"1", "0", "0"}), pt({"0", "1", "0"}),
                              pt({"0", "0", "1"}), pt({"1", "1", "1"})),
                  NotCollinear);

  // Invariance under invertible linear maps of the line.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat m = random_invertible(2, rng);
    Vec ta = mat_vec(m, inf.coords), tb = mat_vec(m, zero.coords);
    Vec tc = mat_vec(m, one.coords), td = mat_vec(m, two.coords);
    CHECK(cross_ratio(ProjPoint(ta), ProjPoint(tb), ProjPoint(tc), ProjPoint(td)) ==
          cross_ratio(inf, zero, one, two));
  }
}

TEST_CASE("affine charts") {
  const AffineChart std2 = standard_chart(2);
  CHECK(to_chart(pt({"2", "4", "2"}), std2) == Vec{Scalar(1), Scalar(2)});
  CHECK_THROWS_AS(to_chart(pt({"1", "2", "0"}), std2), AtInfinity);

  // Chart (y,z) -> [1-y-z : y : z]: second and third coordinates are affine,
  // the plane x1+x2+x3 = 0 is at infinity.
  AffineChart chart;
  chart.infinity = hp({"1", "1", "1"});
  chart.basis = Mat{Vec{Scalar(0), Scalar(1), Scalar(0)},
                    Vec{Scalar(0), Scalar(0), Scalar(1)},
                    Vec{Scalar(1), Scalar(1), Scalar(1)}};
  CHECK(to_chart(pt({"1", "1", "1"}), chart) == Vec{scalar_from_string("1/3"),
                                                    scalar_from_string("1/3")});
  CHECK(from_chart(Vec{scalar_from_string("1/4"), scalar_from_string("1/2")}, chart) ==
        pt({"1", "1", "2"}));

  // Round trips, both directions.
  const Vec t{scalar_from_string("1/4"), scalar_from_string("1/2")};
  CHECK(to_chart(from_chart(t, chart), chart) == t);
  const AffineChart derived = chart_at_infinity(hp({"1", "1", "1"}));
  const ProjPoint q = pt({"5", "-2", "3"});
  CHECK(from_chart(to_chart(q, derived), derived) == q);
  CHECK(derived.infinity == hp({"1", "1", "1"}));
}

TEST_CASE("simplex basics") {
  const Simplex delta = Simplex::standard(2);
  CHECK(delta.face(0) == hp({"1", "0", "0"}));
  CHECK(delta.face(1) == hp({"0", "1", "0"}));
  CHECK(delta.face(2) == hp({"0", "0", "1"}));
  CHECK(delta.generic_point(pt({"1", "2", "3"})));
  CHECK_FALSE(delta.generic_point(pt({"0", "2", "3"})));
  CHECK(delta.generic_hyperplane(hp({"1", "2", "3"})));
  CHECK_FALSE(delta.generic_hyperplane(hp({"1", "2", "0"})));
  CHECK_THROWS_AS(Simplex({pt({"1", "0", "0"}), pt({"0", "1", "0"}),
                           pt({"1", "1", "0"})}),
                  NotAFrame);
}
