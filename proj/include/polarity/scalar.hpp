#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polarity {

/// Exact rational scalar. Canonical form (coprime, positive denominator) is
/// maintained by GMP; zero-test and equality are exact.
using Scalar = mpq_class;

inline int sign(const Scalar& s) { return sgn(s); }

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Parses "a", "-a" or "a/b" into a canonical rational.
Scalar scalar_from_string(const std::string& text);

/// "a" or "a/b", canonical form.
std::string scalar_to_string(const Scalar& s);

inline double to_double(const Scalar& s) { return s.get_d(); }

using Vec = std::vector<Scalar>;

}  // namespace polarity
