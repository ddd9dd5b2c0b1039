#include "polarity/harmonic.hpp"

#include <map>
#include <sstream>

#include "polarity/errors.hpp"

namespace polarity {

namespace {

// c = alpha*a + beta*b on the line (a b).
std::pair<Scalar, Scalar> decompose(const ProjPoint& a, const ProjPoint& b,
                                    const ProjPoint& c) {
  const std::size_t n = a.coords.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar det = a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i];
      if (is_zero(det)) continue;
      const Scalar alpha = (c.coords[i] * b.coords[j] - c.coords[j] * b.coords[i]) / det;
      const Scalar beta = (a.coords[i] * c.coords[j] - a.coords[j] * c.coords[i]) / det;
      return {alpha, beta};
    }
  throw DegenerateTriple("base points coincide");
}

Vec combine(const Scalar& alpha, const ProjPoint& a, const Scalar& beta,
            const ProjPoint& b) {
  Vec v(a.coords.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = alpha * a.coords[i] + beta * b.coords[i];
  return v;
}

// Harmonic polar of a point with all coordinates nonzero, with respect to the
// standard simplex, by the recursive face construction. `y` holds vertex-basis
// coordinates; returns hyperplane coefficients in the same coordinates.
Vec std_harmonic_polar(const Vec& y) {
  const std::size_t m = y.size();
  if (m == 2) {
    // Fourth harmonic of (e_1, e_2, y) is (y_1, -y_2); return the form
    // vanishing on it.
    return {y[1], y[0]};
  }
  // u_i = H_i ∩ (p_i p) has face coordinates equal to y with entry i dropped.
  // Its polar inside the face spans part of the result; two faces suffice to
  // pin the hyperplane.
  Mat rows;
  for (std::size_t face = 0; face < 2; ++face) {
    Vec dropped;
    for (std::size_t j = 0; j < m; ++j)
      if (j != face) dropped.push_back(y[j]);
    const Vec form = std_harmonic_polar(dropped);
    // Points of the face hyperplane that lie on the sub-polar, embedded back.
    const auto basis = nullspace({form});
    for (const auto& v : basis) {
      Vec amb(m, Scalar(0));
      std::size_t k = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != face) amb[j] = v[k++];
      rows.push_back(std::move(amb));
    }
  }
  const auto ns = nullspace(rows);
  if (ns.size() != 1) throw ConcurrencyFailure("face polars do not span a hyperplane");
  return ns[0];
}

}  // namespace

ProjPoint fourth_harmonic(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  if (!collinear({a, b, c})) throw NotCollinear();
  if (a == b) throw DegenerateTriple("a == b");
  const auto [alpha, beta] = decompose(a, b, c);
  if (is_zero(alpha) || is_zero(beta)) throw DegenerateTriple("c coincides with a or b");
  return ProjPoint(combine(alpha, a, -beta, b)).canonical();
}

ProjHyperplane harmonic_polar_point(const ProjPoint& p, const Simplex& delta) {
  if (!delta.generic_point(p)) throw NotGeneric("point on a face");
  const Mat vm = delta.vertex_matrix();
  const Vec y = solve(vm, p.coords);  // vertex-basis coordinates, all nonzero
  const Vec form = std_harmonic_polar(y);
  return ProjHyperplane(vec_mat(form, inverse(vm))).canonical();
}

ProjHyperplane harmonic_polar_point_pairwise(const ProjPoint& p, const Simplex& delta) {
  if (!delta.generic_point(p)) throw NotGeneric("point on a face");
  const std::size_t n1 = delta.vertices.size();
  Mat rows;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j) {
      std::vector<ProjPoint> others;
      for (std::size_t k = 0; k < n1; ++k)
        if (k != i && k != j) others.push_back(delta.vertices[k]);
      others.push_back(p);
      const ProjHyperplane w = span(others);
      const ProjPoint& pi = delta.vertices[i];
      const ProjPoint& pj = delta.vertices[j];
      const ProjPoint vij(combine(dot(w.coeffs, pj.coords), pi,
                                  -dot(w.coeffs, pi.coords), pj));
      const ProjPoint vpij = fourth_harmonic(pi, pj, vij);
      rows.push_back(vpij.coords);
    }
  const auto ns = nullspace(rows);
  if (ns.size() != 1) throw ConcurrencyFailure("v'_ij do not span a hyperplane");
  return ProjHyperplane(ns[0]).canonical();
}

ProjPoint harmonic_polar_hyperplane(const ProjHyperplane& d, const Simplex& delta) {
  if (!delta.generic_hyperplane(d)) throw NotGeneric("hyperplane through a vertex");
  std::vector<ProjPoint> dual_vertices;
  for (std::size_t i = 0; i < delta.vertices.size(); ++i)
    dual_vertices.push_back(dual_point(delta.face(i)));
  const Simplex dual_simplex(std::move(dual_vertices));
  const ProjHyperplane polar_in_dual = harmonic_polar_point(dual_point(d), dual_simplex);
  const ProjPoint result = dual_point(polar_in_dual).canonical();
  if (delta.dim() == 2) {
    // The three lines (p_i u_i) must pass through the result.
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
      const ProjPoint up = meet({d, delta.face(i)});
      const ProjPoint u = fourth_harmonic(delta.vertices[j], delta.vertices[k], up);
      if (!incident(result, span({delta.vertices[i], u})))
        throw ConcurrencyFailure("(p_i u_i) not concurrent at D^#");
    }
  }
  return result;
}

HarmonicFigure harmonic_figure(const ProjPoint& p, const Simplex& delta) {
  if (delta.dim() != 2) throw UnsupportedDimension("figure data is planar");
  if (!delta.generic_point(p)) throw NotGeneric("point on a side");
  HarmonicFigure fig{.u = {}, .u_prime = {}, .polar = harmonic_polar_point(p, delta)};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    const ProjPoint u = meet({span({delta.vertices[i], p}), delta.face(i)});
    fig.u.push_back(u);
    fig.u_prime.push_back(fourth_harmonic(delta.vertices[j], delta.vertices[k], u));
  }
  return fig;
}

namespace {

struct ReplayState {
  std::map<std::string, ProjPoint> points;
  std::map<std::string, ProjHyperplane> lines;
};

ReplayState run(const ConstructionTrace& trace) {
  ReplayState st;
  for (const auto& step : trace.steps) {
    switch (step.kind) {
      case TraceStep::Kind::PickPoint:
        st.points.emplace(step.label, step.point);
        break;
      case TraceStep::Kind::Join:
        st.lines.emplace(step.label, span({st.points.at(step.arg1), st.points.at(step.arg2)}));
        break;
      case TraceStep::Kind::Meet:
        st.points.emplace(step.label, meet({st.lines.at(step.arg1), st.lines.at(step.arg2)}));
        break;
    }
  }
  return st;
}

}  // namespace

ProjPoint ConstructionTrace::replay_point() const {
  return run(*this).points.at(result).canonical();
}

ProjHyperplane ConstructionTrace::replay_line(const std::string& label) const {
  return run(*this).lines.at(label).canonical();
}

std::string ConstructionTrace::serialize() const {
  std::ostringstream os;
  int k = 0;
  for (const auto& step : steps) {
    os << "STEP " << ++k << ' ';
    switch (step.kind) {
      case TraceStep::Kind::PickPoint: {
        os << "PICK " << step.label;
        for (const auto& c : step.point.canonical().coords)
          os << ' ' << scalar_to_string(c);
        break;
      }
      case TraceStep::Kind::Join:
        os << "JOIN " << step.label << ' ' << step.arg1 << ' ' << step.arg2 << ' '
           << step.order;
        break;
      case TraceStep::Kind::Meet:
        os << "MEET " << step.label << ' ' << step.arg1 << ' ' << step.arg2 << ' '
           << step.order;
        break;
    }
    os << '\n';
  }
  os << "RESULT " << result << '\n';
  return os.str();
}

ConstructionTrace ConstructionTrace::deserialize(const std::string& text) {
  ConstructionTrace trace;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "RESULT") {
      ls >> trace.result;
      continue;
    }
    if (tag != "STEP") throw ParseError("bad trace line: " + line);
    int k;
    std::string kind, label;
    ls >> k >> kind >> label;
    TraceStep step;
    step.label = label;
    if (kind == "PICK") {
      step.kind = TraceStep::Kind::PickPoint;
      Vec coords;
      std::string tok;
      while (ls >> tok) coords.push_back(scalar_from_string(tok));
      step.point = ProjPoint(coords);
    } else if (kind == "JOIN" || kind == "MEET") {
      step.kind = kind == "JOIN" ? TraceStep::Kind::Join : TraceStep::Kind::Meet;
      ls >> step.arg1 >> step.arg2 >> step.order;
    } else {
      throw ParseError("bad trace step kind: " + kind);
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

ConstructionTrace ruler_trace(const ProjPoint& a, const ProjPoint& b,
                              const ProjPoint& c, const ProjPoint& m,
                              const ProjPoint& n) {
  if (a.coords.size() != 3) throw UnsupportedDimension("ruler construction is planar");
  if (!collinear({a, b, c})) throw NotCollinear();
  if (a == b || c == a || c == b) throw DegenerateTriple();
  const ProjHyperplane base = span({a, b});
  if (incident(m, base)) throw BadAuxiliary("m on the base line");
  const ProjHyperplane cm = span({c, m});
  if (!incident(n, cm) || n == c || n == m) throw BadAuxiliary("n must lie on (c m), distinct from c and m");

  ConstructionTrace t;
  auto pick = [&](const std::string& label, const ProjPoint& p) {
    t.steps.push_back({TraceStep::Kind::PickPoint, label, p.canonical(), "", "", 0});
  };
  auto join = [&](const std::string& label, const std::string& p1,
                  const std::string& p2, int order) {
    t.steps.push_back({TraceStep::Kind::Join, label, {}, p1, p2, order});
  };
  auto meet_step = [&](const std::string& label, const std::string& l1,
                       const std::string& l2) {
    t.steps.push_back({TraceStep::Kind::Meet, label, {}, l1, l2, 0});
  };
  pick("a", a);
  pick("b", b);
  pick("c", c);
  pick("m", m);
  pick("n", n);
  // Quadrangle (m, n, x, y); drawn lines carry the construction order 4,1,3,2.
  join("an", "a", "n", 4);
  join("bm", "b", "m", 1);
  meet_step("x", "an", "bm");
  join("am", "a", "m", 3);
  join("bn", "b", "n", 2);
  meet_step("y", "am", "bn");
  join("xy", "x", "y", 0);
  join("base", "a", "b", 0);
  meet_step("h", "xy", "base");
  t.result = "h";
  return t;
}

}  // namespace polarity
