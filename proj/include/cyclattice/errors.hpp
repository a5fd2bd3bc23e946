#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyc {

/// Base of every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact integer result does not fit in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A size guard tripped. Carries the offending cardinality and the bound.
class ResourceError : public Error {
 public:
  ResourceError(std::string what, std::uint64_t size, std::uint64_t bound)
      : Error(what + ": " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t size_;
  std::uint64_t bound_;
};

/// Input outside an operation's domain (zero length, trivial condition, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + msg),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cyc
