#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padic {

// Precondition violation on otherwise well-formed input (zero denominator,
// coinciding points, argument outside the function's domain).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PrimeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when the known digits of an input cannot decide the requested result.
// `required()` is the absolute precision that would have been enough, or -1
// when no finite amount is known to suffice.
class InsufficientPrecision : public std::runtime_error {
 public:
  explicit InsufficientPrecision(const std::string& what, std::int64_t required = -1)
      : std::runtime_error(what), required_(required) {}

  std::int64_t required() const noexcept { return required_; }

 private:
  std::int64_t required_;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace padic
