#pragma once

#include <stdexcept>
#include <string>

namespace mgn {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// (h, s) does not describe a stable moduli space.
class UnstableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A brute-force enumeration would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold (integrality, homogeneity, ...) failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace mgn
