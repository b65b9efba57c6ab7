#pragma once

#include <stdexcept>
#include <string>

namespace maxmin {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// −∞ + +∞ (or +∞ + −∞) was requested.
class UndefinedInfinitySum : public Error {
 public:
  UndefinedInfinitySum() : Error("undefined sum of -inf and +inf") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidThreshold : public Error {
 public:
  using Error::Error;
};

class NonZeroDiagonal : public Error {
 public:
  using Error::Error;
};

class EmptyZone : public Error {
 public:
  using Error::Error;
};

class IterationBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxmin
