#pragma once

#include <stdexcept>
#include <string>

namespace lefsig {

// Bad input data: non-primitive classes, out-of-range piece genus, context
// mismatches, malformed fibration descriptions. Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Document syntax or resolution problems, with source position. Exit code 1.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}

  int line;
  int column;
};

// A broken internal invariant, e.g. a kernel whose dimension is not one.
// Signals a convention or algorithm bug rather than bad input. Exit code 3.
class InternalInvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace lefsig
