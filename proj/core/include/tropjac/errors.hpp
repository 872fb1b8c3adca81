#pragma once

#include <stdexcept>
#include <string>

namespace tropjac {

/// Malformed or inconsistent input: a violated data invariant (not sharp,
/// disconnected graph, length outside the monoid, dimension mismatch, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input on which a mathematical precondition fails
/// (a non-PL vertex function, a cocycle without bounded monodromy, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result the theory guarantees did not materialize. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tropjac
