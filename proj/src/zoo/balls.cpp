#include "padic/zoo/balls.hpp"

#include <mpfr.h>

#include "padic/errors.hpp"
#include "padic/vanderput.hpp"

namespace padic::zoo {

bool contains(const Ball& b, const PadicNumber& x) {
  PadicNumber d = x - b.center;
  if (d.is_exact_zero()) return true;
  if (d.is_nonzero()) return d.valuation() >= b.depth;
  if (d.abs_precision() >= b.depth) return true;
  throw InsufficientPrecision("ball membership needs p^" + std::to_string(b.depth), b.depth);
}

bool disjoint(const Ball& a, const Ball& b) {
  PadicNumber d = a.center - b.center;
  if (d.is_exact_zero()) return false;
  if (!d.is_nonzero()) throw InsufficientPrecision("ball centers too coarse", std::min(a.depth, b.depth));
  return d.valuation() < std::min(a.depth, b.depth);
}

std::int64_t BallSystem::first_overlap(std::size_t bound) const {
  std::size_t n = std::min(bound, balls.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!disjoint(balls[i], balls[j])) return static_cast<std::int64_t>(i);
    }
  }
  return -1;
}

std::int64_t BallSystem::locate(const PadicNumber& x) const {
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (contains(balls[i], x)) return static_cast<std::int64_t>(i);
  }
  return -1;
}

BallSystem bump_balls(Prime p, std::int64_t count) {
  BallSystem s;
  for (std::int64_t n = 1; n <= count; ++n) s.balls.push_back({PadicNumber::power_of_p(p, n), 2 * n + 1});
  return s;
}

BallSystem pair_balls(Prime p, std::int64_t count) {
  BallSystem s;
  for (std::int64_t n = 1; n <= count; ++n) s.balls.push_back({PadicNumber::power_of_p(p, n), n + 1});
  return s;
}

BallSystem gbeta_balls(const PadicNumber& a, std::int64_t count) {
  BallSystem s;
  for (std::int64_t n = 1; n <= count; ++n) {
    s.balls.push_back({a + PadicNumber::power_of_p(a.prime(), n * n), n * n + 1});
  }
  return s;
}

BallSystem sphere_system(Prime p, std::int64_t count) {
  BallSystem s;
  for (std::int64_t n = 1; n <= count; ++n) {
    for (std::int64_t d = 1; d < p.value(); ++d) {
      s.balls.push_back({PadicNumber::power_of_p(p, n * n, d), n * n + 1});
    }
  }
  return s;
}

BallSystem vdp_balls(Prime p, std::int64_t count) {
  BallSystem s;
  for (std::int64_t n = 0; n < count; ++n) {
    mpz_class c = sigma(static_cast<std::uint64_t>(n), p.value());
    s.balls.push_back({PadicNumber::exact(p, mpq_class(c)), leading_position(c, p.value()) + 1});
  }
  return s;
}

mpz_class sigma(std::uint64_t n, std::int64_t p) {
  const auto q = static_cast<std::uint64_t>(p - 1);
  return mpz_class(static_cast<unsigned long>(n % q + 1)) * prime_power(p, static_cast<std::int64_t>(n / q));
}

std::uint64_t sigma_index(std::int64_t j, std::uint32_t d, std::int64_t p) {
  return static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(p - 1) + d - 1;
}

std::vector<mpz_class> greedy_vdp_indices(std::int64_t p, std::uint64_t limit) {
  Prime prime(p);
  std::vector<Ball> kept;
  std::vector<mpz_class> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    mpz_class c(static_cast<unsigned long>(n));
    Ball b{PadicNumber::exact(prime, mpq_class(c)), leading_position(c, p) + 1};
    bool ok = true;
    for (const auto& k : kept) {
      if (!disjoint(k, b)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.push_back(b);
      out.push_back(c);
    }
  }
  return out;
}

std::int64_t m_schedule(const mpz_class& k, std::int64_t p) {
  if (k < 1) throw DomainError("m_k is defined for k >= 1");
  if (k == 1) return 1;
  constexpr mpfr_prec_t bits = 256;
  mpfr_t kk, lk, llk, lp, v;
  mpfr_inits2(bits, kk, lk, llk, lp, v, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(kk, k.get_mpz_t(), MPFR_RNDN);
  mpfr_log(lk, kk, MPFR_RNDN);
  mpfr_log(llk, lk, MPFR_RNDN);
  mpfr_add(v, lk, llk, MPFR_RNDN);
  mpfr_set_si(lp, static_cast<long>(p), MPFR_RNDN);
  mpfr_log(lp, lp, MPFR_RNDN);
  mpfr_div(v, v, lp, MPFR_RNDN);
  // k ln k is transcendental, so the quotient is never an integer; the only
  // risk is rounding across one, which 256 bits rule out unless it is this close.
  mpfr_t fl, gap;
  mpfr_inits2(bits, fl, gap, static_cast<mpfr_ptr>(nullptr));
  mpfr_floor(fl, v);
  mpfr_sub(gap, v, fl, MPFR_RNDN);
  bool close = mpfr_cmp_d(gap, 1e-60) < 0 || mpfr_cmp_d(gap, 1 - 1e-60) > 0;
  long m = mpfr_get_si(fl, MPFR_RNDN);
  mpfr_clears(kk, lk, llk, lp, v, fl, gap, static_cast<mpfr_ptr>(nullptr));
  if (close) throw InsufficientPrecision("m_k floor too close to an integer to certify");
  return std::max<std::int64_t>(1, m);
}

}  // namespace padic::zoo
