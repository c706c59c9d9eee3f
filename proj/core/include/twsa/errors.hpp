#pragma once

#include <stdexcept>
#include <string>

namespace twsa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tree path was looked up that is not in the domain of the tree.
class PathAbsent : public Error {
 public:
  using Error::Error;
};

/// An action was illegal at the current node (moving to a missing node,
/// popping a non-leaf or the root, pushing onto an occupied side).
class WellFormednessViolation : public Error {
 public:
  using Error::Error;
};

/// The input word handed to run() already contains the endmarker.
class EndmarkerInInput : public Error {
 public:
  using Error::Error;
};

/// A machine without the real-time flag was run without an explicit step budget.
class BudgetRequired : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a real-time machine received another kind.
class NotRealTime : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// leftQuotient: the machine halted or broke while reading the prefix.
class PrefixKillsMachine : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured word budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two wildcard transition patterns of equal specificity overlap with
/// different right-hand sides.
class PatternConflict : public Error {
 public:
  PatternConflict(int line, const std::string& message) : Error(message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Syntax or semantic error while reading a machine file; the message carries
/// the line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace twsa
