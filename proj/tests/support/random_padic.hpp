#pragma once

#include <random>
#include <vector>

#include "padic/padic_number.hpp"

namespace padic::testing {

// Capped value p^v * (d0 + d1 p + ...) with d0 != 0 and `len` random digits.
inline PadicNumber random_capped(std::mt19937_64& rng, Prime p, std::int64_t v, std::int64_t len) {
  std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(p.value() - 1));
  std::uniform_int_distribution<std::uint32_t> lead(1, static_cast<std::uint32_t>(p.value() - 1));
  std::vector<std::uint32_t> ds(static_cast<std::size_t>(len));
  ds[0] = lead(rng);
  for (std::size_t i = 1; i < ds.size(); ++i) ds[i] = digit(rng);
  return PadicNumber::from_digits(p, v, ds, v + len);
}

// Random element of Z_p known modulo p^n, zero included (as a bounded zero).
inline PadicNumber random_integral(std::mt19937_64& rng, Prime p, std::int64_t n) {
  std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(p.value() - 1));
  std::vector<std::uint32_t> ds(static_cast<std::size_t>(n));
  for (auto& d : ds) d = digit(rng);
  return PadicNumber::from_digits(p, 0, ds, n);
}

// Exact rational a/b with |a|, |b| <= bound, b != 0.
inline PadicNumber random_exact(std::mt19937_64& rng, Prime p, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return PadicNumber::exact(p, mpq_class(mpz_class(num(rng)), mpz_class(den(rng))));
}

}  // namespace padic::testing
