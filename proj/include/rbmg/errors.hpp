#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbmg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated structural precondition (unknown vertex, bad edit set, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised by solvers and recognizers that require sigma(x) != sigma(y) on every edge.
class ImproperColoringError : public Error {
 public:
  using Error::Error;
};

// Exhaustive tree search requested on more leaves than the configured cap.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace rbmg
