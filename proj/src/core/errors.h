#pragma once

#include <stdexcept>
#include <string>

namespace tonesearch {

/// Base class for all data-level errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tone transition that the active R table leaves undefined.
class UndefinedTransitionError : public Error {
 public:
  using Error::Error;
};

/// Two sequences that must have equal length do not.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; carries the 1-based line it was found on.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line) : Error(msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Too few or collinear-degenerate samples for a regression fit.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Regression lines that do not admit a valid parameter derivation.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated (too-short input, bad config).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace tonesearch
