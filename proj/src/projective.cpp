#include "polarity/projective.hpp"

#include <sstream>

#include "polarity/errors.hpp"

namespace polarity {

namespace {

bool all_zero(const Vec& v) {
  for (const auto& s : v)
    if (!is_zero(s)) return false;
  return true;
}

// Scale to coprime integers with positive first nonzero entry.
Vec canonical_tuple(const Vec& v) {
  mpz_class den_lcm(1);
  for (const auto& s : v) den_lcm = lcm(den_lcm, s.get_den());
  mpz_class num_gcd(0);
  for (const auto& s : v) num_gcd = gcd(num_gcd, mpz_class(s.get_num() * (den_lcm / s.get_den())));
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  Vec out(v.size());
  bool flip = false, sign_seen = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * factor;
    out[i].canonicalize();
    if (!sign_seen && !is_zero(out[i])) {
      sign_seen = true;
      flip = sgn(out[i]) < 0;
    }
  }
  if (flip)
    for (auto& s : out) s = -s;
  return out;
}

std::string tuple_str(const Vec& v, char open, char close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ':';
    os << scalar_to_string(v[i]);
  }
  os << close;
  return os.str();
}

}  // namespace

ProjPoint::ProjPoint(Vec c) : coords(std::move(c)) {
  if (coords.size() < 2 || all_zero(coords)) throw InvalidPoint();
}

ProjPoint ProjPoint::canonical() const { return ProjPoint(canonical_tuple(coords)); }

bool ProjPoint::operator==(const ProjPoint& o) const {
  return canonical_tuple(coords) == canonical_tuple(o.coords);
}

std::string ProjPoint::str() const { return tuple_str(canonical_tuple(coords), '[', ']'); }

ProjHyperplane::ProjHyperplane(Vec c) : coeffs(std::move(c)) {
  if (coeffs.size() < 2 || all_zero(coeffs)) throw InvalidPoint();
}

ProjHyperplane ProjHyperplane::canonical() const {
  return ProjHyperplane(canonical_tuple(coeffs));
}

bool ProjHyperplane::operator==(const ProjHyperplane& o) const {
  return canonical_tuple(coeffs) == canonical_tuple(o.coeffs);
}

std::string ProjHyperplane::str() const {
  return tuple_str(canonical_tuple(coeffs), '[', ']');
}

ProjPoint dual_point(const ProjHyperplane& h) { return ProjPoint(h.coeffs); }
ProjHyperplane dual_hyperplane(const ProjPoint& p) { return ProjHyperplane(p.coords); }

ProjPoint canonicalize(const ProjPoint& p) { return p.canonical(); }

bool incident(const ProjPoint& p, const ProjHyperplane& h) {
  return is_zero(dot(p.coords, h.coeffs));
}

ProjHyperplane span(const std::vector<ProjPoint>& points) {
  if (points.empty()) throw DegenerateSpan("no points");
  const std::size_t n = points[0].coords.size();
  Mat rows;
  for (const auto& p : points) rows.push_back(p.coords);
  if (rows.size() != n - 1) throw DegenerateSpan("need n points in dimension n");
  const auto ns = nullspace(rows);
  if (ns.size() != 1) throw DegenerateSpan("dependent points");
  return ProjHyperplane(ns[0]).canonical();
}

ProjPoint meet(const std::vector<ProjHyperplane>& hyperplanes) {
  if (hyperplanes.empty()) throw DegenerateSpan("no hyperplanes");
  const std::size_t n = hyperplanes[0].coeffs.size();
  Mat rows;
  for (const auto& h : hyperplanes) rows.push_back(h.coeffs);
  if (rows.size() != n - 1) throw DegenerateSpan("need n hyperplanes in dimension n");
  const auto ns = nullspace(rows);
  if (ns.size() != 1) throw DegenerateSpan("dependent hyperplanes");
  return ProjPoint(ns[0]).canonical();
}

bool collinear(const std::vector<ProjPoint>& points) {
  Mat rows;
  for (const auto& p : points) rows.push_back(p.coords);
  return rank(rows) <= 2;
}

std::string LineValue::str() const {
  return infinite ? "inf" : scalar_to_string(value);
}

LineValue cross_ratio(const ProjPoint& a, const ProjPoint& b,
                      const ProjPoint& c, const ProjPoint& d) {
  if (!collinear({a, b, c, d})) throw NotCollinear();
  if (a == b || a == c || b == c) throw DegenerateQuadruple();
  // Coordinates on the line: write c and d in the basis (a, b).
  const std::size_t n = a.coords.size();
  Mat sys(n, Vec(2));
  for (std::size_t i = 0; i < n; ++i) {
    sys[i][0] = a.coords[i];
    sys[i][1] = b.coords[i];
  }
  auto in_basis = [&](const ProjPoint& p) -> std::pair<Scalar, Scalar> {
    // Solve alpha*a + beta*b = p using two independent rows.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Scalar det = sys[i][0] * sys[j][1] - sys[i][1] * sys[j][0];
        if (is_zero(det)) continue;
        const Scalar alpha = (p.coords[i] * sys[j][1] - p.coords[j] * sys[i][1]) / det;
        const Scalar beta = (sys[i][0] * p.coords[j] - sys[j][0] * p.coords[i]) / det;
        return {alpha, beta};
      }
    throw DegenerateQuadruple();  // a == b as projective points
  };
  // With a=[1:0], b=[0:1], c=[alpha:beta], d=[gamma:delta] the chart t = x/y
  // gives cr = (alpha*delta)/(beta*gamma).
  const auto [alpha, beta] = in_basis(c);
  const auto [gamma, delta] = in_basis(d);
  const Scalar num = alpha * delta, den = beta * gamma;
  if (is_zero(den)) {
    if (is_zero(num)) throw DegenerateQuadruple();
    return LineValue::infinity();
  }
  return LineValue::finite(num / den);
}

AffineChart standard_chart(std::size_t dim) {
  Vec inf(dim + 1, Scalar(0));
  inf.back() = 1;
  return AffineChart{ProjHyperplane(inf), identity_matrix(dim + 1)};
}

AffineChart chart_at_infinity(const ProjHyperplane& h) {
  const std::size_t n = h.coeffs.size();
  std::size_t pivot = 0;
  Scalar best(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar a = abs(h.coeffs[i]);
    if (a > best) {
      best = a;
      pivot = i;
    }
  }
  Mat basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == pivot) continue;
    Vec row(n, Scalar(0));
    row[i] = 1;
    basis.push_back(row);
  }
  basis.push_back(h.coeffs);
  return AffineChart{h, std::move(basis)};
}

Vec to_chart(const ProjPoint& p, const AffineChart& chart) {
  Vec y = mat_vec(chart.basis, p.coords);
  if (is_zero(y.back())) throw AtInfinity();
  Vec out(y.size() - 1);
  for (std::size_t i = 0; i + 1 < y.size(); ++i) out[i] = y[i] / y.back();
  return out;
}

ProjPoint from_chart(const Vec& affine, const AffineChart& chart) {
  Vec y(affine);
  y.push_back(Scalar(1));
  return ProjPoint(solve(chart.basis, y)).canonical();
}

Simplex::Simplex(std::vector<ProjPoint> v) : vertices(std::move(v)) {
  if (vertices.size() < 3) throw NotAFrame("simplex needs n+1 >= 3 vertices");
  Mat m = vertex_matrix();
  if (m.size() != vertices.size()) throw NotAFrame("vertex count != dimension + 1");
  if (is_zero(determinant(m))) throw NotAFrame("degenerate simplex");
}

Mat Simplex::vertex_matrix() const {
  const std::size_t n = vertices[0].coords.size();
  Mat m(n, Vec(vertices.size()));
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (vertices[j].coords.size() != n) throw NotAFrame("mixed dimensions");
    for (std::size_t i = 0; i < n; ++i) m[i][j] = vertices[j].coords[i];
  }
  return m;
}

ProjHyperplane Simplex::face(std::size_t i) const {
  std::vector<ProjPoint> others;
  for (std::size_t j = 0; j < vertices.size(); ++j)
    if (j != i) others.push_back(vertices[j]);
  return span(others);
}

bool Simplex::generic_point(const ProjPoint& p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (incident(p, face(i))) return false;
  return true;
}

bool Simplex::generic_hyperplane(const ProjHyperplane& h) const {
  for (const auto& v : vertices)
    if (incident(v, h)) return false;
  return true;
}

Simplex Simplex::standard(std::size_t dim) {
  std::vector<ProjPoint> v;
  for (std::size_t i = 0; i <= dim; ++i) {
    Vec c(dim + 1, Scalar(0));
    c[i] = 1;
    v.emplace_back(c);
  }
  return Simplex(std::move(v));
}

}  // namespace polarity
