#pragma once

#include <stdexcept>
#include <string>

namespace polarity {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define POLARITY_ERROR(Name)                       \
  struct Name : Error {                            \
    explicit Name(const std::string& msg = #Name)  \
        : Error(msg) {}                            \
  }

POLARITY_ERROR(InvalidPoint);
POLARITY_ERROR(DegenerateSpan);
POLARITY_ERROR(NotCollinear);
POLARITY_ERROR(DegenerateQuadruple);
POLARITY_ERROR(DegenerateTriple);
POLARITY_ERROR(AtInfinity);
POLARITY_ERROR(NotAFrame);
POLARITY_ERROR(NotGeneric);
POLARITY_ERROR(BadAuxiliary);
POLARITY_ERROR(ConcurrencyFailure);
POLARITY_ERROR(ArityMismatch);
POLARITY_ERROR(InvalidVector);
POLARITY_ERROR(KernelObstruction);
POLARITY_ERROR(NotInvertibleHere);
POLARITY_ERROR(UndefinedAtVertex);
POLARITY_ERROR(DegenerateBody);
POLARITY_ERROR(NotInterior);
POLARITY_ERROR(NotDisjoint);
POLARITY_ERROR(NoConvergence);
POLARITY_ERROR(ParseError);
POLARITY_ERROR(UnsupportedDimension);

#undef POLARITY_ERROR

}  // namespace polarity
