#pragma once

#include <stdexcept>
#include <string>

namespace ordt {

// Input outside the domain of an operation (x < 2, M = 0, non-prime p, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would touch more residues than the configured budget allows.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed or mismatched checkpoint / serialized input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed. This indicates a bug or a falsified
// mathematical statement, never bad user input.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ordt
