#include "padic/norm.hpp"

#include <cmath>
#include <limits>

#include "padic/errors.hpp"

namespace padic {

double Norm::to_double() const {
  if (zero_) return 0.0;
  return std::pow(static_cast<double>(prime_), static_cast<double>(exponent_));
}

double Norm::log() const {
  if (zero_) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(exponent_) * std::log(static_cast<double>(prime_));
}

std::string Norm::to_string() const {
  if (zero_) return "0";
  return "p^" + std::to_string(exponent_);
}

Norm Norm::operator*(const Norm& other) const {
  if (prime_ != other.prime_) throw PrimeMismatch("norms of different primes");
  if (zero_ || other.zero_) return zero(prime_);
  return power(prime_, exponent_ + other.exponent_);
}

Norm Norm::operator/(const Norm& other) const {
  if (prime_ != other.prime_) throw PrimeMismatch("norms of different primes");
  if (other.zero_) throw DomainError("division by a zero norm");
  if (zero_) return zero(prime_);
  return power(prime_, exponent_ - other.exponent_);
}

Norm Norm::pow(std::int64_t k) const {
  if (zero_) {
    if (k <= 0) throw DomainError("non-positive power of a zero norm");
    return *this;
  }
  return power(prime_, exponent_ * k);
}

std::strong_ordering operator<=>(const Norm& a, const Norm& b) {
  if (a.prime_ != b.prime_) throw PrimeMismatch("norms of different primes");
  if (a.zero_ || b.zero_) {
    return static_cast<int>(!a.zero_) <=> static_cast<int>(!b.zero_);
  }
  return a.exponent_ <=> b.exponent_;
}

}  // namespace padic
