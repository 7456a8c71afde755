#include "padic/prime.hpp"

#include <string>

#include "padic/errors.hpp"

namespace padic {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::int64_t value) : value_(value) {
  if (value > kMax || !is_prime(value)) {
    throw DomainError("not a supported prime: " + std::to_string(value));
  }
}

}  // namespace padic
