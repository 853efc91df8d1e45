#pragma once

#include <stdexcept>
#include <string>

namespace defect_robust {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidAngle : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

/// Raised when a path's accumulated winding is not a multiple of the period.
class QuantizationFailure : public Error {
 public:
  using Error::Error;
};

class UnknownTemplate : public Error {
 public:
  using Error::Error;
};

class InvalidCellSet : public Error {
 public:
  using Error::Error;
};

/// A defect center coincides with a lattice vertex or lies on a path edge.
class DegenerateCenter : public Error {
 public:
  using Error::Error;
};

class SweepFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace defect_robust
