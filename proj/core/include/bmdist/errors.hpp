#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bmdist {

// Raised when an argument violates an operation's precondition
// (parity of n, parameter outside its domain, zero direction, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a vertex list fails one of the CentralPolygon invariants.
// invariant() names the failing check so callers can report it verbatim.
class InvalidPolygon : public std::invalid_argument {
 public:
  InvalidPolygon(std::string invariant, const std::string& detail)
      : std::invalid_argument(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

// Raised by iterative procedures that cannot produce a result: a family with
// no sign change on the requested arc, or a bisection that hit its cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bmdist
