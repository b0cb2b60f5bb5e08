#pragma once

#include <stdexcept>
#include <string>

namespace menhir {

/// Base class for every mathematical-domain failure raised by the library.
/// The CLI maps anything derived from it to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Binary operation on elements (or vectors) of different dimension.
class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A value that must lie strictly inside the open unit ball does not.
class OutsideDisk : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Loop division whose linear system turned out rank deficient.
class DivisionUndefined : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input too close to the boundary for artanh to stay finite.
class NearLightlike : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace menhir
