#pragma once

#include <stdexcept>
#include <string>

namespace pgv {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by parse_pcp; carries the 1-based source position of the problem.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line), column(column) {}

  int line;
  int column;
};

/// Raised when an enumeration would exceed its configured order bound.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace pgv
