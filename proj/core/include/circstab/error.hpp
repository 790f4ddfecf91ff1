#pragma once

#include <stdexcept>
#include <string>

namespace circstab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An order or vertex count above the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (connection-set literals, cache lines, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (odd n where even is required,
/// mismatched moduli, a non-bijective permutation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace circstab
