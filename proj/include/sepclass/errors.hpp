#pragma once

#include <stdexcept>
#include <string>

namespace sepclass {

// Caller-side errors: bad arguments, malformed objects, failed preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class NotAMember : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

// Library-side failures. These signal a broken internal invariant and are
// never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DecompositionFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace sepclass
