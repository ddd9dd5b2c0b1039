#include "polarity/scalar.hpp"

#include "polarity/errors.hpp"

namespace polarity {

Scalar scalar_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  mpz_class n, d;
  if (num.empty() || n.set_str(num, 10) != 0)
    throw ParseError("bad rational literal '" + text + "'");
  if (den.empty() || d.set_str(den, 10) != 0 || sgn(d) == 0)
    throw ParseError("bad rational literal '" + text + "'");
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

}  // namespace polarity
