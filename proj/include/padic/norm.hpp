#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace padic {

/// An exact value of the p-adic absolute value: either 0 or p^exponent.
///
/// |x|_p = p^(-ord_p x), so a number of valuation v has Norm exponent -v.
/// Norms of different primes do not compare.
class Norm {
 public:
  static Norm zero(std::int64_t prime) { return Norm(prime, true, 0); }
  static Norm power(std::int64_t prime, std::int64_t exponent) {
    return Norm(prime, false, exponent);
  }
  static Norm one(std::int64_t prime) { return power(prime, 0); }

  bool is_zero() const noexcept { return zero_; }
  std::int64_t prime() const noexcept { return prime_; }
  /// Exponent k with value p^k. Meaningless for zero.
  std::int64_t exponent() const noexcept { return exponent_; }

  double to_double() const;
  /// Natural logarithm; -inf for zero.
  double log() const;

  /// "p^k", or "0".
  std::string to_string() const;

  Norm operator*(const Norm& other) const;
  /// Division by a zero norm throws DomainError.
  Norm operator/(const Norm& other) const;
  Norm pow(std::int64_t k) const;

  friend bool operator==(const Norm& a, const Norm& b) noexcept {
    return a.prime_ == b.prime_ && a.zero_ == b.zero_ && (a.zero_ || a.exponent_ == b.exponent_);
  }
  friend std::strong_ordering operator<=>(const Norm& a, const Norm& b);

 private:
  Norm(std::int64_t prime, bool zero, std::int64_t exponent)
      : prime_(prime), zero_(zero), exponent_(zero ? 0 : exponent) {}

  std::int64_t prime_;
  bool zero_;
  std::int64_t exponent_;
};

}  // namespace padic
