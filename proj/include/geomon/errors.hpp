#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geomon {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class DuplicateLabel : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is not connected") {}
  using Error::Error;
};

class PathCountOverflow : public Error {
 public:
  PathCountOverflow() : Error("shortest-path count exceeds 128 bits") {}
};

class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when solver results break g <= eg <= seg <= meg. Always a bug.
class ChainViolation : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class RangeTooLarge : public Error {
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

class HeaderMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace geomon
