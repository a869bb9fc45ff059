#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftk {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (p | n, zero where a unit is
/// required, non-invertible series, malformed support, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two operands live over different coefficient rings.
class RingMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The truncation window is too small to certify the requested result.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// A brute-force or enumeration request exceeds the desk-scale caps.
class ScaleExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ftk
