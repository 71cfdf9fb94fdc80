#pragma once

#include <stdexcept>
#include <string>

namespace upho {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A precondition on the input was not met (bad arguments, wrong presentation
// class, malformed sequence, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonHomogeneousError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee that should always hold did not. Always a bug in
// the engine or a violated assumption, never a negative verdict.
class Anomaly : public Error {
 public:
  using Error::Error;
};

}  // namespace upho
