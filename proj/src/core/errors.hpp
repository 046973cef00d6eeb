#pragma once

#include <stdexcept>
#include <string>

namespace pastrev {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct InvalidDimension : Error {
  using Error::Error;
};

struct NotSquare : Error {
  using Error::Error;
};

struct Singular : Error {
  using Error::Error;
};

struct NotEigenvalue : Error {
  using Error::Error;
};

struct ZeroState : Error {
  using Error::Error;
};

struct DivideByZero : Error {
  using Error::Error;
};

// line/column are 1-based where known, 0 when the position is not available
// (e.g. a structurally valid document with a bad value; the message then
// carries the offending path instead).
struct ParseError : Error {
  int line = 0;
  int column = 0;

  explicit ParseError(const std::string& what) : Error(what) {}
  ParseError(const std::string& what, int line_, int column_)
      : Error(what), line(line_), column(column_) {}
};

}  // namespace pastrev
