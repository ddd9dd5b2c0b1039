#include "polarity/linalg.hpp"

#include <utility>

#include "polarity/errors.hpp"

namespace polarity {

Mat identity_matrix(std::size_t n) {
  Mat m(n, Vec(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat c(n, Vec(m, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (!is_zero(a[i][t]))
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

Vec mat_vec(const Mat& a, const Vec& v) {
  Vec r(a.size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Vec vec_mat(const Vec& v, const Mat& a) {
  Vec r(a[0].size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += v[i] * a[i][j];
  return r;
}

Mat transpose(const Mat& a) {
  Mat t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

namespace {

// Forward elimination; returns the list of pivot columns. If track_sign is
// given, accumulates the permutation sign there.
std::vector<std::size_t> eliminate(Mat& a, int* track_sign = nullptr) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (track_sign) *track_sign = -*track_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(a[i][c])) continue;
      const Scalar f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Scalar determinant(Mat a) {
  const std::size_t n = a.size();
  int s = 1;
  const auto pivots = eliminate(a, &s);
  if (pivots.size() < n) return Scalar(0);
  Scalar d(s);
  for (std::size_t i = 0; i < n; ++i) d *= a[i][i];
  return d;
}

std::size_t rank(Mat a) { return eliminate(a).size(); }

Mat inverse(Mat a) {
  const std::size_t n = a.size();
  Mat aug = std::move(a);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Scalar(0));
    aug[i][n + i] = 1;
  }
  if (eliminate(aug).size() < n) throw DegenerateSpan("singular matrix");
  // back substitution
  for (std::size_t i = n; i-- > 0;) {
    const Scalar d = aug[i][i];
    for (std::size_t j = i; j < 2 * n; ++j) aug[i][j] /= d;
    for (std::size_t k = 0; k < i; ++k) {
      const Scalar f = aug[k][i];
      if (is_zero(f)) continue;
      for (std::size_t j = i; j < 2 * n; ++j) aug[k][j] -= f * aug[i][j];
    }
  }
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Vec solve(Mat a, Vec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  // All pivots must land in the coefficient columns, not the appended rhs.
  const auto pivots = eliminate(a);
  if (pivots.size() < n || pivots.back() >= n)
    throw DegenerateSpan("singular system");
  Vec x(n, Scalar(0));
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

std::vector<Vec> nullspace(Mat a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const auto pivots = eliminate(a);
  const std::size_t r = pivots.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t i = r; i-- > 0;) {
      const std::size_t c = pivots[i];
      Scalar acc(0);
      for (std::size_t j = c + 1; j < cols; ++j) acc += a[i][j] * v[j];
      v[c] = -acc / a[i][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace polarity
