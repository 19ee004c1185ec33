#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anchorrec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a configured enumeration or representation limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `offset()` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A deck whose multiplicities cannot come from any graph.
class InconsistentDeckError : public Error {
 public:
  using Error::Error;
};

}  // namespace anchorrec
