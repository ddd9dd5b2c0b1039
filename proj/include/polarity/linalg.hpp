#pragma once

#include <cstddef>
#include <vector>

#include "polarity/scalar.hpp"

namespace polarity {

/// Dense row-major matrix of exact rationals.
using Mat = std::vector<Vec>;

Mat identity_matrix(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& v);
Vec vec_mat(const Vec& v, const Mat& a);  // row vector times matrix
Mat transpose(const Mat& a);

Scalar determinant(Mat a);
std::size_t rank(Mat a);

/// Inverse by Gauss-Jordan elimination; throws DegenerateSpan if singular.
Mat inverse(Mat a);

/// Solves a*x = b for square a; throws DegenerateSpan if singular.
Vec solve(Mat a, Vec b);

/// Basis of the right nullspace of a (rows are vectors of length cols(a)).
std::vector<Vec> nullspace(Mat a);

Scalar dot(const Vec& a, const Vec& b);

}  // namespace polarity
