#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctsp {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `offset` is a byte offset (graph6) or a 1-based
/// line number (edge list), as named by `where()`.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, bool is_line)
      : Error(what + (is_line ? " (line " : " (byte ") + std::to_string(offset) + ")"),
        offset_(offset),
        is_line_(is_line) {}
  std::size_t offset() const { return offset_; }
  bool is_line() const { return is_line_; }

 private:
  std::size_t offset_;
  bool is_line_;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured desk-scale limit.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Something the theory says cannot happen did happen.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctsp
