#pragma once

#include <stdexcept>
#include <string>

namespace dyckgram {

// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computation would exceed a configured size or enumeration cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace dyckgram
