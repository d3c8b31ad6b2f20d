#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its contract (bad interval, order out of
/// range, unsupported input for an engine, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The streaming engine only handles lambda == 1 everywhere.
class UnsupportedInputError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A ranking where every pair is tied; rank correlation is undefined.
class DegenerateRankingError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace thx
