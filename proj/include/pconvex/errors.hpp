#pragma once

#include <stdexcept>
#include <string>

namespace pconvex {

// Malformed input or violated precondition on argument shape.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the domain of an operation (not simple,
// dimension mismatch, function vanishing on the curve, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSimple : public DomainError {
 public:
  using DomainError::DomainError;
};

// Zero-length segment passed to an operation that needs an injective curve.
class DegenerateSegment : public DomainError {
 public:
  using DomainError::DomainError;
};

// A seeded search or shrink schedule ran out of attempts.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pconvex
