#pragma once

#include <stdexcept>
#include <string>

namespace morifiber {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with arguments that violate its preconditions
/// (unknown ids, missing edges, points that are not smooth, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A structural claim that holds for every model reachable through the
/// engine's operations failed. Indicates corrupted input or a bug, never a
/// user mistake.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A relative MMP could not make progress on the given input.
class MmpStuckError : public Error {
 public:
  using Error::Error;
};

/// Parse or replay failure of a construction script.
class ScriptError : public Error {
 public:
  ScriptError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ":" + std::to_string(column) +
              ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace morifiber
