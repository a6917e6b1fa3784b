#pragma once

#include <stdexcept>
#include <string>

namespace bshopf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or precondition-violating input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size limit of an enumeration-based algorithm was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Exact 64-bit arithmetic would have wrapped around.
class OverflowError : public GuardError {
 public:
  using GuardError::GuardError;
};

/// Two independent computations of the same quantity disagreed.
/// Seeing one of these means there is a bug somewhere.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

// Throws GuardError("<what>: <value> exceeds limit <limit>") when value > limit.
void require_at_most(const char* what, long long value, long long limit);

}  // namespace bshopf
