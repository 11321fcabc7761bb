#pragma once

#include <stdexcept>
#include <string>

namespace isodim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated (membership, injectivity, shape...).
/// The CLI maps these to exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. The CLI maps these to exit code 2.
class ParseError : public Error {
 public:
  using Error::Error;
};

class FieldMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotMemberError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInjectiveError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSurjectiveError : public DomainError {
 public:
  using DomainError::DomainError;
};

class AlreadyInImageError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSubspaceError : public DomainError {
 public:
  using DomainError::DomainError;
};

class BudgetExceededError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedFieldError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace isodim
