#pragma once

#include <stdexcept>
#include <string>

namespace braidlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagram file is syntactically malformed.
struct ParseError : Error {
  using Error::Error;
};

// Diagram data violates the Coxeter matrix axioms.
struct InvalidMatrix : Error {
  using Error::Error;
};

// A word refers to a generator the diagram does not declare.
struct UnknownGenerator : Error {
  using Error::Error;
};

// Equivalence-class search exceeded its node budget.
struct ClassTooLarge : Error {
  using Error::Error;
};

// Chain enumeration exceeded the poset element budget.
struct PosetTooLarge : Error {
  using Error::Error;
};

// Generic size guard for derived structures (complexes, power sets).
struct SizeBudget : Error {
  using Error::Error;
};

// An operation that requires a finite-type subdiagram got something else.
struct NotFiniteType : Error {
  using Error::Error;
};

// The set of square-free divisors has no unique maximum.  This never
// happens for genuine positive braid monoids; treated as a hard error.
struct NonUniqueMaximum : Error {
  using Error::Error;
};

// A structural hypothesis required by a construction does not hold.
struct HypothesisFailed : Error {
  using Error::Error;
};

}  // namespace braidlab
