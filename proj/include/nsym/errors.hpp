#pragma once

#include <stdexcept>
#include <string>

namespace nsym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad vector, bad index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard was exceeded (permutation length, search nodes).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the range of the coefficient type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace nsym
