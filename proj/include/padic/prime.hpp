#pragma once

#include <compare>
#include <cstdint>

namespace padic {

/// A prime certified by trial division at construction.
class Prime {
 public:
  static constexpr std::int64_t kMax = (std::int64_t{1} << 31) - 1;

  /// Throws DomainError unless `value` is a prime in [2, kMax].
  explicit Prime(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }
  operator std::int64_t() const noexcept { return value_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::int64_t value_;
};

bool is_prime(std::int64_t n) noexcept;

}  // namespace padic
