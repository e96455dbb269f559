#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shellrange {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// cA + dI is not invertible, so f(A) is undefined.
class SingularDenominator : public Error {
 public:
  using Error::Error;
};

/// ad - bc vanishes.
class DegenerateMoebius : public Error {
 public:
  using Error::Error;
};

class ModelDimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OutsideModel : public Error {
 public:
  using Error::Error;
};

/// No member of the dual pencil splits into two real lines.
class NoRealLinePair : public Error {
 public:
  using Error::Error;
};

/// Operation is not defined for the range's case.
class WrongCase : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  using Error::Error;
};

/// A closed-form quantity landed outside its mathematically admissible
/// domain by more than rounding can explain.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NonFiniteEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace shellrange
