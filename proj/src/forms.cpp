#include "polarity/forms.hpp"

#include <algorithm>
#include <functional>

#include "polarity/errors.hpp"

namespace polarity {

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class multi_factorial(const MultiIndex& alpha) {
  mpz_class f(1);
  for (int a : alpha) f *= factorial(a);
  return f;
}

Scalar power_product(const Vec& u, const MultiIndex& alpha) {
  Scalar r(1);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int t = 0; t < alpha[i]; ++t) r *= u[i];
  return r;
}

bool all_zero_vec(const Vec& u) {
  for (const auto& s : u)
    if (!is_zero(s)) return false;
  return true;
}

// Enumerates beta <= alpha componentwise with |beta| = target.
void for_each_sub_index(const MultiIndex& alpha, int target,
                        const std::function<void(const MultiIndex&)>& fn) {
  MultiIndex beta(alpha.size(), 0);
  const int n = static_cast<int>(alpha.size());
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n) {
      if (remaining == 0) fn(beta);
      return;
    }
    const int hi = std::min(alpha[pos], remaining);
    for (int v = 0; v <= hi; ++v) {
      beta[pos] = v;
      rec(pos + 1, remaining - v);
    }
    beta[pos] = 0;
  };
  rec(0, target);
}

}  // namespace

SymmetricForm SymmetricForm::monomial(MultiIndex alpha, Scalar coeff) {
  int d = 0;
  for (int a : alpha) d += a;
  SymmetricForm f{d, static_cast<int>(alpha.size()), {}};
  f.add_term(alpha, coeff);
  return f;
}

SymmetricForm SymmetricForm::linear(const Vec& form_coeffs) {
  SymmetricForm f{1, static_cast<int>(form_coeffs.size()), {}};
  for (std::size_t i = 0; i < form_coeffs.size(); ++i) {
    MultiIndex alpha(form_coeffs.size(), 0);
    alpha[i] = 1;
    f.add_term(alpha, form_coeffs[i]);
  }
  return f;
}

Scalar SymmetricForm::evaluate(const Vec& u) const {
  Scalar r(0);
  for (const auto& [alpha, c] : coeffs) r += c * power_product(u, alpha);
  return r;
}

bool SymmetricForm::is_zero() const { return coeffs.empty(); }

void SymmetricForm::add_term(const MultiIndex& alpha, const Scalar& c) {
  if (polarity::is_zero(c)) return;
  auto it = coeffs.find(alpha);
  if (it == coeffs.end()) {
    coeffs.emplace(alpha, c);
  } else {
    it->second += c;
    if (polarity::is_zero(it->second)) coeffs.erase(it);
  }
}

ProjHyperplane SymmetricForm::as_hyperplane() const {
  if (degree != 1) throw ArityMismatch("not a linear form");
  if (is_zero()) throw KernelObstruction("zero linear form");
  Vec v(nvars, Scalar(0));
  for (const auto& [alpha, c] : coeffs)
    for (int i = 0; i < nvars; ++i)
      if (alpha[i] == 1) v[i] = c;
  return ProjHyperplane(v).canonical();
}

bool SymmetricForm::proportional(const SymmetricForm& other) const {
  if (degree != other.degree || nvars != other.nvars) return false;
  if (is_zero() || other.is_zero()) return is_zero() == other.is_zero();
  if (coeffs.size() != other.coeffs.size()) return false;
  const auto& [alpha0, c0] = *coeffs.begin();
  auto it = other.coeffs.find(alpha0);
  if (it == other.coeffs.end()) return false;
  const Scalar ratio = it->second / c0;
  for (const auto& [alpha, c] : coeffs) {
    auto jt = other.coeffs.find(alpha);
    if (jt == other.coeffs.end() || jt->second != c * ratio) return false;
  }
  return true;
}

SymmetricForm multiply(const SymmetricForm& a, const SymmetricForm& b) {
  SymmetricForm r{a.degree + b.degree, a.nvars, {}};
  for (const auto& [alpha, ca] : a.coeffs)
    for (const auto& [beta, cb] : b.coeffs) {
      MultiIndex gamma(alpha);
      for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] += beta[i];
      r.add_term(gamma, ca * cb);
    }
  return r;
}

SymmetricForm add(const SymmetricForm& a, const SymmetricForm& b) {
  SymmetricForm r = a;
  for (const auto& [beta, cb] : b.coeffs) r.add_term(beta, cb);
  return r;
}

SymmetricForm simplex_form(const Simplex& delta) {
  SymmetricForm f = SymmetricForm::linear(delta.face(0).coeffs);
  for (std::size_t i = 1; i < delta.vertices.size(); ++i)
    f = multiply(f, SymmetricForm::linear(delta.face(i).coeffs));
  return f;
}

Scalar polarize_eval(const SymmetricForm& c, const std::vector<Vec>& vectors) {
  if (static_cast<int>(vectors.size()) != c.degree)
    throw ArityMismatch("polar form takes exactly degree-many vectors");
  const mpz_class dfac = factorial(c.degree);
  Scalar total(0);
  for (const auto& [alpha, coeff] : c.coeffs) {
    // Index multiset of the monomial, e.g. x1^2 x3 -> (0,0,2).
    std::vector<int> idx;
    for (int i = 0; i < c.nvars; ++i)
      for (int t = 0; t < alpha[i]; ++t) idx.push_back(i);
    Scalar sum(0);
    std::sort(idx.begin(), idx.end());
    do {
      Scalar term(1);
      for (std::size_t slot = 0; slot < idx.size(); ++slot)
        term *= vectors[slot][idx[slot]];
      sum += term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    total += coeff * Scalar(multi_factorial(alpha), dfac) * sum;
  }
  total.canonicalize();
  return total;
}

SymmetricForm contract(const SymmetricForm& c, const Vec& u, int k) {
  if (k < 1 || k > c.degree) throw ArityMismatch("contraction count out of range");
  const int rest = c.degree - k;
  const mpz_class dfac = factorial(c.degree);
  const mpz_class kfac = factorial(k);
  const mpz_class rfac = factorial(rest);
  SymmetricForm r = SymmetricForm::zero(rest, c.nvars);
  for (const auto& [alpha, coeff] : c.coeffs) {
    const Scalar base = coeff * Scalar(multi_factorial(alpha), dfac);
    for_each_sub_index(alpha, rest, [&](const MultiIndex& beta) {
      MultiIndex diff(alpha);
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= beta[i];
      Scalar term = base * power_product(u, diff);
      term *= Scalar(kfac, multi_factorial(diff));
      term *= Scalar(rfac, multi_factorial(beta));
      term.canonicalize();
      r.add_term(beta, term);
    });
  }
  return r;
}

bool kernel_member(const SymmetricForm& c, const Vec& u, PolarKernelLevel level) {
  if (all_zero_vec(u)) throw InvalidVector();
  const int k = level == PolarKernelLevel::first   ? 1
                : level == PolarKernelLevel::second ? 2
                                                    : c.degree;
  return contract(c, u, k).is_zero();
}

SymmetricForm kth_polar(const ProjPoint& p, const SymmetricForm& c, int k) {
  const SymmetricForm r = contract(c, p.coords, k);
  if (r.is_zero()) throw KernelObstruction("point in kernel at required level");
  return r;
}

ProjHyperplane last_polar(const ProjPoint& p, const SymmetricForm& c) {
  return kth_polar(p, c, c.degree - 1).as_hyperplane();
}

ProjPoint last_polar_inverse(const ProjHyperplane& h, const Simplex& delta) {
  const Mat vm = delta.vertex_matrix();
  const Vec hy = vec_mat(h.coeffs, vm);  // coefficients in vertex coordinates
  const std::size_t n1 = hy.size();
  Vec y(n1, Scalar(1));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      if (j != i) y[i] *= hy[j];
  if (all_zero_vec(y)) throw NotInvertibleHere("hyperplane through two or more vertices");
  return ProjPoint(mat_vec(vm, y)).canonical();
}

ProjPoint cremona(const ProjPoint& p) {
  if (p.coords.size() != 3) throw UnsupportedDimension("Cremona map is planar");
  const Vec& x = p.coords;
  Vec y{x[1] * x[2], x[0] * x[2], x[0] * x[1]};
  if (all_zero_vec(y)) throw UndefinedAtVertex();
  return ProjPoint(y).canonical();
}

ProjHyperplane conic_polar_line(const ProjPoint& p, const SymmetricForm& conic) {
  if (conic.degree != 2) throw ArityMismatch("conic expected");
  return kth_polar(p, conic, 1).as_hyperplane();
}

ProjPoint conic_pole(const ProjHyperplane& line, const SymmetricForm& conic) {
  if (conic.degree != 2) throw ArityMismatch("conic expected");
  const int n = conic.nvars;
  Mat m(n, Vec(n, Scalar(0)));
  for (int i = 0; i < n; ++i) {
    Vec ei(n, Scalar(0));
    ei[i] = 1;
    const SymmetricForm row = contract(conic, ei, 1);
    for (const auto& [alpha, c] : row.coeffs)
      for (int j = 0; j < n; ++j)
        if (alpha[j] == 1) m[i][j] = c;
  }
  return ProjPoint(solve(m, line.coeffs)).canonical();
}

}  // namespace polarity
