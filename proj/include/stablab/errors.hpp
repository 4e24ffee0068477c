#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stablab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based character offset into
/// the parsed text, or npos when no single location applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what
                               : what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::string message_;
  std::size_t position_;
};

/// A normal-closure certificate failed to verify, or a Tietze move was
/// applied outside its preconditions.
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// Operands from different metric groups (family or degree disagree).
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine failed to meet its tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Enumeration limits (degree, generator count) exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of budget before it found an exact homomorphism.
class NoWitness : public Error {
 public:
  using Error::Error;
};

}  // namespace stablab
