#pragma once

#include <stdexcept>
#include <string>

namespace detrad {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (polynomials, problem files, flags).
struct ParseError : Error {
  using Error::Error;
};

// Mixing values from different coefficient fields.
struct FieldMismatchError : Error {
  using Error::Error;
};

// A construction's hypothesis does not hold for the given data.
struct HypothesisError : Error {
  using Error::Error;
};

// A dependence relation is ill-posed or fails to vanish on the entries.
struct RelationError : Error {
  using Error::Error;
};

// A Groebner computation exceeded its configured budget; the outcome is
// inconclusive, never silently truncated.
struct BudgetError : Error {
  using Error::Error;
};

// Operation called outside its contract (non-square determinant, zero
// polynomial where nonzero is required, index out of range, ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

}  // namespace detrad
