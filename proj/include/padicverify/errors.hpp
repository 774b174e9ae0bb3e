#pragma once

#include <stdexcept>
#include <string>

namespace pv {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live over different primes.
struct PrimeMismatchError : Error {
  explicit PrimeMismatchError(const std::string& msg) : Error(msg) {}
};

// Division by an exact zero or by a value indistinguishable from zero.
struct DivisionByZeroError : Error {
  explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// An operation would have to report fewer than one trusted digit, or a
// valuation cannot be resolved at working precision.
struct PrecisionExhaustedError : Error {
  explicit PrecisionExhaustedError(const std::string& msg) : Error(msg) {}
};

// Argument outside a series' convergence domain (exp/log).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A configured cost ceiling (e.g. the gamma product bound) was exceeded.
struct CostBoundError : Error {
  explicit CostBoundError(const std::string& msg) : Error(msg) {}
};

// Linear system has no usable pivot at working precision.
struct SingularSystemError : Error {
  explicit SingularSystemError(const std::string& msg) : Error(msg) {}
};

// A quantity that must be rational (constant coordinate only) has
// non-constant coordinates that resolve as nonzero.  Signals a bug.
struct RationalityError : Error {
  explicit RationalityError(const std::string& msg) : Error(msg) {}
};

// Malformed textual input.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace pv
