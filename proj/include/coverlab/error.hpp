#pragma once

#include <stdexcept>
#include <string>

namespace coverlab {

// Base class for all toolkit failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: host mismatch, malformed file, out-of-range parameter, failed
// precondition on user-supplied data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Structurally meaningless request, e.g. a covering poset with k <= 2 or a
// domination query on a poset with no proper nontrivial up-set.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed its enumeration budget. Fail fast,
// never emit partial output.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace coverlab
