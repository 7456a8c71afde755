#include "padic/binomial.hpp"

#include <algorithm>

#include "padic/errors.hpp"

namespace padic {

std::int64_t ord_p_factorial(std::int64_t n, std::int64_t p) {
  std::int64_t total = 0;
  for (std::int64_t q = n / p; q > 0; q /= p) total += q;
  return total;
}

PadicNumber pow_one_plus(const PadicNumber& y, const PadicNumber& alpha, std::int64_t abs_precision) {
  if (y.prime() != alpha.prime()) throw PrimeMismatch("pow_one_plus: base and exponent primes differ");
  const Prime p = y.prime();
  if (y.is_nonzero() && y.valuation() < 1) throw DomainError("pow_one_plus: |y|_p must be <= 1/p");
  if (y.is_bounded_zero() && y.abs_precision() < 1) {
    throw InsufficientPrecision("pow_one_plus: cannot confirm y in pZ_p", 1);
  }
  if (alpha.is_nonzero() && alpha.valuation() < 0) {
    throw DomainError("pow_one_plus: exponent must lie in Z_p");
  }
  if (y.is_exact_zero() || alpha.is_exact_zero()) return PadicNumber::one(p);

  // Output precision: what the inputs determine, capped at the request.
  std::int64_t vy = y.low_index();
  std::int64_t out = std::min(abs_precision, y.abs_precision());
  if (alpha.abs_precision() != PadicNumber::kExact) {
    out = std::min(out, alpha.abs_precision() + vy);
  }
  if (out <= 0) return PadicNumber::bounded_zero(p, out);

  const std::int64_t pv = p.value();
  std::int64_t width = out + ord_p_factorial(out - 1, pv);
  mpz_class a = alpha.residue(std::min(width, alpha.abs_precision()));
  mpz_class yy = y.residue(std::min(width, y.abs_precision()));

  mpz_class modulus = prime_power(pv, width);
  const mpz_class out_mod = prime_power(pv, out);
  mpz_class term = 1;
  mpz_class sum = 1;
  for (std::int64_t i = 1; i < out; ++i) {
    term = term * (a - (i - 1)) * yy;
    mpz_fdiv_r(term.get_mpz_t(), term.get_mpz_t(), modulus.get_mpz_t());
    std::int64_t e = 0;
    std::int64_t rest = i;
    while (rest % pv == 0) {
      rest /= pv;
      ++e;
    }
    if (e > 0) {
      // The exact term is divisible by p^e, so its residue is too.
      mpz_class pe = prime_power(pv, e);
      mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), pe.get_mpz_t());
      width -= e;
      modulus = prime_power(pv, width);
    }
    mpz_class inv;
    mpz_class r(static_cast<unsigned long>(rest));
    mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    term = term * inv % modulus;
    sum += term;
  }
  mpz_fdiv_r(sum.get_mpz_t(), sum.get_mpz_t(), out_mod.get_mpz_t());
  return PadicNumber::from_residue(p, 0, sum, out);
}

}  // namespace padic
