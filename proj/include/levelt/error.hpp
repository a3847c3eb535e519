#pragma once

#include <stdexcept>
#include <string>

namespace levelt {

// Raised when an operation's mathematical precondition does not hold
// (singular member, non pseudo-reflection quotient, shared eigenvalue, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a constructed object fails its own post-verification.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levelt
