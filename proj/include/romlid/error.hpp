#pragma once

#include <stdexcept>
#include <string>

namespace romlid {

// Error classes map onto CLI exit codes: usage = 2, data = 3, internal = 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : Error {
  using Error::Error;
};

// Bad input data: malformed files, label mismatches, coverage gaps.
struct DataError : Error {
  using Error::Error;
};

struct ParseError : DataError {
  ParseError(const std::string& what, size_t line)
      : DataError("line " + std::to_string(line) + ": " + what), line(line) {}
  explicit ParseError(const std::string& what) : DataError(what), line(0) {}
  size_t line;
};

struct CoverageError : DataError {
  CoverageError(const std::string& what, char32_t cp) : DataError(what), code_point(cp) {}
  char32_t code_point;
};

// A violated invariant inside the library itself.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace romlid
