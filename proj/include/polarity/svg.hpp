#pragma once

#include <string>

#include "polarity/harmonic.hpp"
#include "polarity/projective.hpp"

namespace polarity {

/// Triangle, point p, the cevian feet u_i, their harmonic conjugates u'_i and
/// the polar line through them, rendered in the standard chart.
std::string svg_harmonic_figure(const ProjPoint& p, const Simplex& delta);

/// Straightedge fourth-harmonic construction; drawn lines carry their
/// construction-order numbers and the trace is embedded as a comment.
std::string svg_ruler_figure(const ConstructionTrace& trace);

/// Conic through the triangle's vertices (first polar of p) with the tangent
/// line at each vertex.
std::string svg_circumconic_figure(const ProjPoint& p, const Simplex& delta);

}  // namespace polarity
