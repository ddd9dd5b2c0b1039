#include "polarity/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "polarity/errors.hpp"
#include "polarity/forms.hpp"

namespace polarity {

namespace {

constexpr double kCanvas = 600.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);  // avoid "-0.000"
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

struct Painter {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  std::ostringstream body;

  void fit(const std::vector<std::array<double, 2>>& pts) {
    xmin = ymin = 1e300;
    xmax = ymax = -1e300;
    for (const auto& p : pts) {
      xmin = std::min(xmin, p[0]);
      xmax = std::max(xmax, p[0]);
      ymin = std::min(ymin, p[1]);
      ymax = std::max(ymax, p[1]);
    }
    const double w = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
    xmin = cx - 0.72 * w;
    xmax = cx + 0.72 * w;
    ymin = cy - 0.72 * w;
    ymax = cy + 0.72 * w;
  }

  std::array<double, 2> map(double x, double y) const {
    return {kCanvas * (x - xmin) / (xmax - xmin),
            kCanvas * (ymax - y) / (ymax - ymin)};
  }

  void point(const std::string& label, double x, double y) {
    const auto [px, py] = map(x, y);
    body << "  <circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
         << "\" r=\"4\" class=\"pt\"/>\n";
    body << "  <text x=\"" << fmt(px + 7) << "\" y=\"" << fmt(py - 7)
         << "\" class=\"lbl\">" << label << "</text>\n";
  }

  void segment(double x1, double y1, double x2, double y2, const std::string& cls) {
    const auto [a1, b1] = map(x1, y1);
    const auto [a2, b2] = map(x2, y2);
    body << "  <line x1=\"" << fmt(a1) << "\" y1=\"" << fmt(b1) << "\" x2=\""
         << fmt(a2) << "\" y2=\"" << fmt(b2) << "\" class=\"" << cls << "\"/>\n";
  }

  // a*x + b*y + c = 0 clipped to the view box.
  void line(double a, double b, double c, const std::string& cls,
            const std::string& annotation = "") {
    std::vector<std::array<double, 2>> hits;
    auto consider = [&](double x, double y) {
      const double eps = 1e-9 * (std::fabs(xmax - xmin) + std::fabs(ymax - ymin));
      if (x >= xmin - eps && x <= xmax + eps && y >= ymin - eps && y <= ymax + eps)
        hits.push_back({x, y});
    };
    if (std::fabs(b) > 1e-300) {
      consider(xmin, -(a * xmin + c) / b);
      consider(xmax, -(a * xmax + c) / b);
    }
    if (std::fabs(a) > 1e-300) {
      consider(-(b * ymin + c) / a, ymin);
      consider(-(b * ymax + c) / a, ymax);
    }
    if (hits.size() < 2) return;
    std::sort(hits.begin(), hits.end());
    const auto& p = hits.front();
    const auto& q = hits.back();
    segment(p[0], p[1], q[0], q[1], cls);
    if (!annotation.empty()) {
      const auto [mx, my] = map((p[0] + q[0]) / 2, (p[1] + q[1]) / 2);
      body << "  <text x=\"" << fmt(mx + 5) << "\" y=\"" << fmt(my - 5)
           << "\" class=\"ord\">" << annotation << "</text>\n";
    }
  }

  std::string finish(const std::string& comment) const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    if (!comment.empty()) out << "<!--\n" << comment << "-->\n";
    out << "  <style>.pt{fill:#000}.lbl{font:14px sans-serif}"
           ".ord{font:13px sans-serif;fill:#a00}"
           ".edge{stroke:#000;stroke-width:1.5}.aux{stroke:#888;stroke-width:1}"
           ".polar{stroke:#a00;stroke-width:1.5}"
           ".conic{stroke:#06a;stroke-width:1.5;fill:none}</style>\n";
    out << body.str();
    out << "</svg>\n";
    return out.str();
  }
};

bool chart_coords(const ProjPoint& p, std::array<double, 2>& out) {
  const double w = to_double(p.coords[2]);
  if (std::fabs(w) < 1e-12) return false;
  out = {to_double(p.coords[0]) / w, to_double(p.coords[1]) / w};
  return true;
}

void check_planar(const Simplex& delta) {
  if (delta.dim() != 2) throw UnsupportedDimension("figures are planar");
}

}  // namespace

std::string svg_harmonic_figure(const ProjPoint& p, const Simplex& delta) {
  check_planar(delta);
  const HarmonicFigure fig = harmonic_figure(p, delta);
  Painter pt;
  std::vector<std::array<double, 2>> anchor;
  std::vector<std::pair<std::string, std::array<double, 2>>> marks;
  auto mark = [&](const std::string& label, const ProjPoint& q, bool fit) {
    std::array<double, 2> c;
    if (!chart_coords(q, c)) return;
    marks.emplace_back(label, c);
    if (fit) anchor.push_back(c);
  };
  for (std::size_t i = 0; i < 3; ++i)
    mark("p" + std::to_string(i + 1), delta.vertices[i], true);
  mark("p", p, true);
  for (std::size_t i = 0; i < 3; ++i) {
    mark("u" + std::to_string(i + 1), fig.u[i], false);
    mark("u'" + std::to_string(i + 1), fig.u_prime[i], false);
  }
  pt.fit(anchor);
  auto draw_line = [&](const ProjHyperplane& h, const std::string& cls) {
    pt.line(to_double(h.coeffs[0]), to_double(h.coeffs[1]), to_double(h.coeffs[2]),
            cls);
  };
  for (std::size_t i = 0; i < 3; ++i) draw_line(delta.face(i), "edge");
  for (std::size_t i = 0; i < 3; ++i)
    draw_line(span({delta.vertices[i], p}), "aux");
  draw_line(fig.polar, "polar");
  for (const auto& [label, c] : marks) pt.point(label, c[0], c[1]);
  return pt.finish("harmonic polar of " + p.canonical().str() + "\npolar line " +
                   fig.polar.str() + "\n");
}

std::string svg_ruler_figure(const ConstructionTrace& trace) {
  Painter pt;
  std::vector<std::array<double, 2>> anchor;
  std::vector<std::pair<std::string, std::array<double, 2>>> marks;
  // Re-run the construction to place every labeled element.
  std::vector<std::pair<std::string, ProjPoint>> pts;
  std::vector<std::pair<std::string, ProjHyperplane>> lines;
  std::vector<std::pair<std::string, int>> line_order;
  for (const auto& step : trace.steps) {
    switch (step.kind) {
      case TraceStep::Kind::PickPoint:
        pts.emplace_back(step.label, step.point);
        break;
      case TraceStep::Kind::Join: {
        ProjPoint a, b;
        for (const auto& [l, q] : pts) {
          if (l == step.arg1) a = q;
          if (l == step.arg2) b = q;
        }
        lines.emplace_back(step.label, span({a, b}));
        line_order.emplace_back(step.label, step.order);
        break;
      }
      case TraceStep::Kind::Meet: {
        ProjHyperplane a, b;
        for (const auto& [l, h] : lines) {
          if (l == step.arg1) a = h;
          if (l == step.arg2) b = h;
        }
        pts.emplace_back(step.label, meet({a, b}));
        break;
      }
    }
  }
  for (const auto& [label, q] : pts) {
    std::array<double, 2> c;
    if (!chart_coords(q, c)) continue;
    marks.emplace_back(label, c);
    anchor.push_back(c);
  }
  pt.fit(anchor);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [label, h] = lines[i];
    const int order = line_order[i].second;
    pt.line(to_double(h.coeffs[0]), to_double(h.coeffs[1]), to_double(h.coeffs[2]),
            label == "xy" || label == "base" ? "edge" : "aux",
            order > 0 ? std::to_string(order) : "");
  }
  for (const auto& [label, c] : marks) pt.point(label, c[0], c[1]);
  return pt.finish(trace.serialize());
}

std::string svg_circumconic_figure(const ProjPoint& p, const Simplex& delta) {
  check_planar(delta);
  if (!delta.generic_point(p)) throw NotGeneric("point on a side");
  const SymmetricForm conic = kth_polar(p, simplex_form(delta), 1);
  Painter pt;
  std::vector<std::array<double, 2>> anchor;
  std::vector<std::pair<std::string, std::array<double, 2>>> marks;
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<double, 2> c;
    if (chart_coords(delta.vertices[i], c)) {
      marks.emplace_back("p" + std::to_string(i + 1), c);
      anchor.push_back(c);
    }
  }
  std::array<double, 2> pc;
  if (chart_coords(p, pc)) {
    marks.emplace_back("p", pc);
    anchor.push_back(pc);
  }
  pt.fit(anchor);
  for (std::size_t i = 0; i < 3; ++i) {
    const ProjHyperplane f = delta.face(i);
    pt.line(to_double(f.coeffs[0]), to_double(f.coeffs[1]), to_double(f.coeffs[2]),
            "edge");
    const ProjHyperplane tangent = conic_polar_line(delta.vertices[i], conic);
    pt.line(to_double(tangent.coeffs[0]), to_double(tangent.coeffs[1]),
            to_double(tangent.coeffs[2]), "polar");
  }
  // Trace the conic through vertex p1 by the pencil of lines through it: the
  // second intersection of each line is a rational point of the conic.
  const Vec& v = delta.vertices[0].coords;
  std::ostringstream path;
  bool open = false;
  std::array<double, 2> prev{0, 0};
  for (int k = -400; k <= 400; ++k) {
    const double t = std::tan(0.5 * 3.14159265358979 * (k / 400.5));
    Vec dir{Scalar(0), Scalar(1), Scalar(t)};
    // Solve conic(v + s*dir) = 0: one root is s=0, the other is -lin/quad.
    Vec grad(3);
    for (int i = 0; i < 3; ++i) {
      Vec e(3, Scalar(0));
      e[i] = 1;
      grad[i] = polarize_eval(conic, {v, e}) * 2;
    }
    const double lin = to_double(dot(grad, dir));
    const double quad = to_double(conic.evaluate(dir));
    if (std::fabs(quad) < 1e-12) {
      open = false;
      continue;
    }
    const double s = -lin / quad;
    const ProjPoint q(Vec{v[0] + Scalar(s) * dir[0], v[1] + Scalar(s) * dir[1],
                          v[2] + Scalar(s) * dir[2]});
    std::array<double, 2> c;
    if (!chart_coords(q, c) || std::fabs(c[0]) > 1e6 || std::fabs(c[1]) > 1e6) {
      open = false;
      continue;
    }
    const auto m = pt.map(c[0], c[1]);
    if (open && std::hypot(m[0] - prev[0], m[1] - prev[1]) < 100) {
      path << " L " << fmt(m[0]) << ' ' << fmt(m[1]);
    } else {
      path << (open ? "\" class=\"conic\"/>\n  <path d=\"M " : "M ") << fmt(m[0])
           << ' ' << fmt(m[1]);
      open = true;
    }
    prev = m;
  }
  if (open)
    pt.body << "  <path d=\"" << path.str() << "\" class=\"conic\"/>\n";
  for (const auto& [label, c] : marks) pt.point(label, c[0], c[1]);
  std::ostringstream comment;
  comment << "circumconic (first polar) of " << p.canonical().str() << "\n";
  for (const auto& [alpha, c] : conic.coeffs) {
    comment << "  coeff";
    for (int a : alpha) comment << ' ' << a;
    comment << " = " << scalar_to_string(c) << "\n";
  }
  return pt.finish(comment.str());
}

}  // namespace polarity
