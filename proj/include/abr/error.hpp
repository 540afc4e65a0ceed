#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace abr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shape does not fit the operation (non-square, wrong column count).
class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Well-formed input that violates a domain invariant (non-increasing t,
/// ragged dimensions, incomplete coloring table).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class TooFewPoints : public Error {
 public:
  using Error::Error;
};

/// A sign condition evaluated to zero, or a tuple lacks the required
/// orientation. Carries the offending index tuple.
class DegenerateError : public Error {
 public:
  DegenerateError(const std::string& what, std::vector<int> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

/// Projected minors are negative: the sequence runs against the cyclic
/// orientation. Reversing it may help.
class WrongOrientation : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

/// An identity that holds for every valid input evaluated to something
/// else. Always an implementation bug.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

/// No construction parameter in the allowed range produced the required
/// property. The witness is the offending subsequence of the last attempt.
class ParameterSearchFailed : public Error {
 public:
  ParameterSearchFailed(const std::string& what, std::vector<int> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace abr
