#pragma once

#include <stdexcept>
#include <string>

namespace sqdiff {

// Exit-code classes used by the CLI: domain/precondition/invariant errors map
// to 1, capacity errors map to 2.

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvariantError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace sqdiff
