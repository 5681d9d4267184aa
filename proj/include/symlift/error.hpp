#pragma once

#include <stdexcept>
#include <string>

namespace symlift {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 1 with a JSON error object.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A desk-scale limit was exceeded (see guards.hpp).
class GuardError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace symlift
