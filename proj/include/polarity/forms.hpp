#pragma once

#include <map>
#include <vector>

#include "polarity/projective.hpp"

namespace polarity {

/// Multi-index exponent vector; entries sum to the form's degree.
using MultiIndex = std::vector<int>;

/// Homogeneous form of degree d in nvars variables, stored as a sparse
/// coefficient map. The associated symmetric polar multilinear form is never
/// stored densely; polarize_eval computes it from the coefficients.
struct SymmetricForm {
  int degree = 0;
  int nvars = 0;
  std::map<MultiIndex, Scalar> coeffs;

  static SymmetricForm zero(int degree, int nvars) { return {degree, nvars, {}}; }
  static SymmetricForm monomial(MultiIndex alpha, Scalar coeff);
  static SymmetricForm linear(const Vec& form_coeffs);

  Scalar evaluate(const Vec& u) const;
  bool is_zero() const;
  void add_term(const MultiIndex& alpha, const Scalar& c);
  /// Degree-1 form as a hyperplane; throws KernelObstruction on the zero form.
  ProjHyperplane as_hyperplane() const;
  /// Equality up to a nonzero scalar.
  bool proportional(const SymmetricForm& other) const;
};

SymmetricForm multiply(const SymmetricForm& a, const SymmetricForm& b);
SymmetricForm add(const SymmetricForm& a, const SymmetricForm& b);

/// Product of the n+1 face forms of delta: the simplex hypersurface of
/// degree n+1, in ambient coordinates.
SymmetricForm simplex_form(const Simplex& delta);

enum class PolarKernelLevel { first, second, third };

/// Value of the polar multilinear form on d vectors.
Scalar polarize_eval(const SymmetricForm& c, const std::vector<Vec>& vectors);

/// Fills k slots of the polar form with u; result has degree d-k.
SymmetricForm contract(const SymmetricForm& c, const Vec& u, int k);

/// Exact membership in ker, ker^2, or ker^d (isotropic cone).
bool kernel_member(const SymmetricForm& c, const Vec& u, PolarKernelLevel level);

/// k-th polar of p: the form psi(u,...,u[k], x,...,x). Throws
/// KernelObstruction when p sits in the kernel at the required level.
SymmetricForm kth_polar(const ProjPoint& p, const SymmetricForm& c, int k);

/// Last polar (k = d-1) as a hyperplane.
ProjHyperplane last_polar(const ProjPoint& p, const SymmetricForm& c);

/// Inverse of the last polarity for the simplex form of delta. Defined when at
/// most one coefficient vanishes in vertex coordinates; a single zero returns
/// the adjacent vertex, more throw NotInvertibleHere.
ProjPoint last_polar_inverse(const ProjHyperplane& h, const Simplex& delta);

/// Standard quadratic birational involution [x1:x2:x3] -> [x2x3:x1x3:x1x2].
ProjPoint cremona(const ProjPoint& p);

/// Polar line of a point with respect to a conic (degree-2 form).
ProjHyperplane conic_polar_line(const ProjPoint& p, const SymmetricForm& conic);
/// Pole of a line with respect to a nondegenerate conic.
ProjPoint conic_pole(const ProjHyperplane& line, const SymmetricForm& conic);

}  // namespace polarity
