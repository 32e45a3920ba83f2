#pragma once

#include <stdexcept>
#include <string>

namespace sz {

/// Base class for every computational failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class GroupError : public Error {
 public:
  using Error::Error;
};

class DepthError : public Error {
 public:
  using Error::Error;
};

class CharacterTableError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Bad user input (unsupported q, unknown subgroup name, malformed modulus).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace sz
