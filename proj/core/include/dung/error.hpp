#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dung {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A framework that violates the data-model invariants (bad name, dangling attack, ...).
class InvalidFramework : public Error {
 public:
  using Error::Error;
};

/// The instance is too large for the requested exhaustive procedure.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A deadline expired before the computation finished.
class Timeout : public Error {
 public:
  Timeout() : Error("deadline exceeded") {}
};

/// Invalid generator parameters.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// External solver is not configured, or configured inconsistently for the job.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// External solver failed. The kind distinguishes the failure mode.
class SolverError : public Error {
 public:
  enum class Kind { kLaunch, kExitStatus, kOutput, kTimeout };

  SolverError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace dung
