#pragma once

#include <stdexcept>
#include <string>

namespace scmlab {

// Error classes map onto process exit codes in the CLI:
// parse = 2, validation = 3, numeric = 4, io = 5.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// -- model construction -----------------------------------------------------

class CyclicGraphError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DuplicateDefinitionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonPsdCovarianceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownParentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownVariableError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MissingNoiseDrawError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownPresetError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DescendantInConditioningSetError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class LatentNotInOutcomeEquationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptySampleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InsufficientObservationsError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// -- numeric ----------------------------------------------------------------

class SingularDesignError : public NumericError {
 public:
  using NumericError::NumericError;
};

class WeakInstrumentError : public NumericError {
 public:
  using NumericError::NumericError;
};

class DegenerateArmError : public NumericError {
 public:
  using NumericError::NumericError;
};

class UnsupportedTransformError : public NumericError {
 public:
  using NumericError::NumericError;
};

class TooManyFailuresError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace scmlab
