#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// A code entry outside [0, n-i], or a malformed spectrum.
class InvalidCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument outside the domain of an operation (bad index, non-covering pair, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal consistency check failed. Always a bug, never bad input.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schubert
