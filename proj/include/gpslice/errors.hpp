#pragma once

#include <stdexcept>
#include <string>

namespace gpslice {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad signature, unknown variable, arity mismatch,
// unparsable rational or JSON. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpslice
