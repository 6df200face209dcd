#pragma once

#include <stdexcept>
#include <string>

namespace mss {

// Root of the library's exception hierarchy. Callers that only care about
// "something in the toolkit rejected the input" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulusError : public Error {
 public:
  InvalidModulusError() : Error("modulus must be positive") {}
};

class WeakPrimeError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class HandleError : public Error {
 public:
  using Error::Error;
};

class DistinctWeightsRequiredError : public Error {
 public:
  DistinctWeightsRequiredError() : Error("distinct weights required") {}
};

class InvalidEdgeError : public Error {
 public:
  using Error::Error;
};

class GuardExceededError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mss
