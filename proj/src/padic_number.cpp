#include "padic/padic_number.hpp"

#include <algorithm>
#include <string>

#include "padic/errors.hpp"

namespace padic {

namespace {

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("value is not invertible modulo a power of p");
  }
  return r;
}

// Removes every factor p from n, returning how many were removed.
std::int64_t strip_p(mpz_class& n, std::int64_t p) {
  if (n == 0) return 0;
  mpz_class pp(static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

// Base-p digits of a nonnegative integer, least significant first, padded or
// cut to exactly `count` entries.
std::vector<std::uint32_t> base_p_digits(const mpz_class& n, std::int64_t p, std::int64_t count) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  if (p <= 36) {
    std::string s = n.get_str(static_cast<int>(p));
    for (auto it = s.rbegin(); it != s.rend() && static_cast<std::int64_t>(out.size()) < count; ++it) {
      char c = *it;
      out.push_back(c <= '9' ? static_cast<std::uint32_t>(c - '0')
                             : static_cast<std::uint32_t>(c - 'a' + 10));
    }
  } else {
    mpz_class q = n;
    while (q != 0 && static_cast<std::int64_t>(out.size()) < count) {
      out.push_back(static_cast<std::uint32_t>(
          mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p))));
    }
  }
  out.resize(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)), 0);
  return out;
}

void require_same_prime(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime()) {
    throw PrimeMismatch("operands over Q_" + std::to_string(x.prime().value()) + " and Q_" +
                        std::to_string(y.prime().value()));
  }
}

}  // namespace

mpz_class prime_power(std::int64_t p, std::int64_t k) {
  if (k < 0) throw DomainError("negative exponent in prime_power");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

std::int64_t ord_p(const mpz_class& n, std::int64_t p) {
  if (n == 0) throw DomainError("ord_p of zero");
  mpz_class m = n;
  return strip_p(m, p);
}

PadicNumber::PadicNumber(Prime p) : prime_(p), state_(State::ExactZero) {}

PadicNumber PadicNumber::bounded_zero(Prime p, std::int64_t abs_precision) {
  if (abs_precision == kExact) return PadicNumber(p);
  PadicNumber z(p, State::BoundedZero);
  z.valuation_ = abs_precision;
  return z;
}

PadicNumber PadicNumber::normalize_exact(Prime p, mpq_class q, std::int64_t v) {
  q.canonicalize();
  if (q == 0) return PadicNumber(p);
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  v += strip_p(num, p);
  v -= strip_p(den, p);
  PadicNumber x(p, State::Nonzero);
  x.valuation_ = v;
  x.rel_ = kExact;
  x.exact_unit_ = mpq_class(num, den);
  x.exact_unit_.canonicalize();
  return x;
}

PadicNumber PadicNumber::normalize_capped(Prime p, mpz_class s, std::int64_t low,
                                          std::int64_t abs_precision) {
  if (s == 0 || low >= abs_precision) return bounded_zero(p, abs_precision);
  std::int64_t w = strip_p(s, p);
  std::int64_t v = low + w;
  if (v >= abs_precision) return bounded_zero(p, abs_precision);
  PadicNumber x(p, State::Nonzero);
  x.valuation_ = v;
  x.rel_ = abs_precision - v;
  x.unit_ = mod_pos(s, prime_power(p, x.rel_));
  return x;
}

PadicNumber PadicNumber::exact(Prime p, const mpq_class& value) {
  return normalize_exact(p, value, 0);
}

PadicNumber PadicNumber::exact(Prime p, std::int64_t value) {
  return normalize_exact(p, mpq_class(mpz_class(static_cast<long>(value))), 0);
}

PadicNumber PadicNumber::power_of_p(Prime p, std::int64_t k, std::int64_t coefficient) {
  return normalize_exact(p, mpq_class(mpz_class(static_cast<long>(coefficient))), k);
}

PadicNumber PadicNumber::from_rational(const mpz_class& num, const mpz_class& den, Prime p,
                                       std::int64_t abs_precision) {
  if (den == 0) throw DomainError("from_rational: zero denominator");
  return exact(p, mpq_class(num, den)).with_precision(abs_precision);
}

PadicNumber PadicNumber::from_rational(std::int64_t num, std::int64_t den, Prime p,
                                       std::int64_t abs_precision) {
  return from_rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)), p,
                       abs_precision);
}

PadicNumber PadicNumber::from_digits(Prime p, std::int64_t valuation,
                                     const std::vector<std::uint32_t>& digits,
                                     std::int64_t abs_precision) {
  mpz_class r = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= static_cast<std::uint64_t>(p.value())) {
      throw DomainError("digit " + std::to_string(*it) + " out of range for p = " +
                        std::to_string(p.value()));
    }
    r = r * static_cast<unsigned long>(p.value()) + static_cast<unsigned long>(*it);
  }
  PadicNumber x = normalize_exact(p, mpq_class(r), valuation);
  if (abs_precision == kExact) return x;
  return x.with_precision(abs_precision);
}

PadicNumber PadicNumber::from_residue(Prime p, std::int64_t valuation, const mpz_class& u,
                                      std::int64_t rel_precision) {
  if (rel_precision == kExact) return normalize_exact(p, mpq_class(u), valuation);
  if (rel_precision <= 0) return bounded_zero(p, valuation + rel_precision);
  return normalize_capped(p, mod_pos(u, prime_power(p, rel_precision)), valuation,
                          valuation + rel_precision);
}

bool PadicNumber::is_exact() const noexcept {
  return state_ == State::ExactZero || (state_ == State::Nonzero && rel_ == kExact);
}

std::int64_t PadicNumber::valuation() const noexcept {
  return state_ == State::Nonzero ? valuation_ : kExact;
}

std::int64_t PadicNumber::low_index() const noexcept {
  return state_ == State::ExactZero ? kExact : valuation_;
}

std::int64_t PadicNumber::abs_precision() const noexcept {
  switch (state_) {
    case State::ExactZero:
      return kExact;
    case State::BoundedZero:
      return valuation_;
    case State::Nonzero:
      return rel_ == kExact ? kExact : valuation_ + rel_;
  }
  return kExact;
}

std::int64_t PadicNumber::rel_precision() const {
  if (state_ != State::Nonzero) throw DomainError("rel_precision of a zero value");
  return rel_;
}

mpz_class PadicNumber::unit_residue(std::int64_t digits) const {
  if (state_ != State::Nonzero) throw DomainError("unit of a zero value");
  if (digits <= 0) return 0;
  mpz_class m = prime_power(prime_, digits);
  if (rel_ == kExact) {
    return mod_pos(exact_unit_.get_num() * inverse_mod(exact_unit_.get_den(), m), m);
  }
  if (digits > rel_) {
    throw InsufficientPrecision("unit requested beyond relative precision", valuation_ + digits);
  }
  return mod_pos(unit_, m);
}

mpq_class PadicNumber::exact_value() const {
  if (state_ == State::ExactZero) return 0;
  if (!is_exact()) throw DomainError("exact_value of a capped p-adic number");
  mpq_class r = exact_unit_;
  if (valuation_ >= 0) {
    r *= mpq_class(prime_power(prime_, valuation_));
  } else {
    r /= mpq_class(prime_power(prime_, -valuation_));
  }
  return r;
}

mpz_class PadicNumber::shifted_residue(std::int64_t low, std::int64_t digits) const {
  if (state_ != State::Nonzero || digits <= 0) return 0;
  std::int64_t d = valuation_ - low;
  if (d >= digits) return 0;
  return unit_residue(digits - d) * prime_power(prime_, d);
}

std::vector<std::uint32_t> PadicNumber::digit_window(std::int64_t from, std::int64_t to) const {
  if (to <= from) return {};
  if (to > abs_precision()) {
    throw InsufficientPrecision("digit p^" + std::to_string(to - 1) + " is not known", to);
  }
  std::vector<std::uint32_t> out(static_cast<std::size_t>(to - from), 0);
  if (state_ != State::Nonzero || to <= valuation_) return out;
  std::int64_t count = to - valuation_;
  auto ds = base_p_digits(unit_residue(count), prime_, count);
  for (std::int64_t i = std::max(from, valuation_); i < to; ++i) {
    out[static_cast<std::size_t>(i - from)] = ds[static_cast<std::size_t>(i - valuation_)];
  }
  return out;
}

std::uint32_t PadicNumber::digit(std::int64_t i) const { return digit_window(i, i + 1)[0]; }

bool PadicNumber::has_finite_expansion() const {
  if (state_ == State::ExactZero) return true;
  if (!is_exact()) return false;
  return exact_unit_.get_den() == 1 && exact_unit_.get_num() > 0;
}

std::vector<std::uint32_t> PadicNumber::digits() const {
  if (state_ != State::Nonzero) return {};
  if (rel_ == kExact) {
    if (!has_finite_expansion()) {
      throw DomainError("exact value with an infinite digit expansion");
    }
    const mpz_class& n = exact_unit_.get_num();
    auto len = static_cast<std::int64_t>(mpz_sizeinbase(n.get_mpz_t(), static_cast<int>(prime_.value() <= 62 ? prime_.value() : 2)));
    auto ds = base_p_digits(n, prime_, len + 1);
    while (!ds.empty() && ds.back() == 0) ds.pop_back();
    return ds;
  }
  auto ds = base_p_digits(unit_, prime_, rel_);
  while (!ds.empty() && ds.back() == 0) ds.pop_back();
  return ds;
}

PadicNumber PadicNumber::head(std::int64_t k) const {
  if (k > abs_precision()) {
    throw InsufficientPrecision("digits below p^" + std::to_string(k) + " are not all known", k);
  }
  if (state_ != State::Nonzero || k <= valuation_) return PadicNumber(prime_);
  return normalize_exact(prime_, mpq_class(unit_residue(k - valuation_)), valuation_);
}

Norm PadicNumber::abs_value() const {
  switch (state_) {
    case State::ExactZero:
      return Norm::zero(prime_);
    case State::BoundedZero:
      throw InsufficientPrecision("absolute value of a zero known only modulo p^" +
                                      std::to_string(valuation_),
                                  -1);
    case State::Nonzero:
      break;
  }
  return Norm::power(prime_, -valuation_);
}

Norm PadicNumber::norm_bound() const {
  if (state_ == State::BoundedZero) return Norm::power(prime_, -valuation_);
  return abs_value();
}

bool PadicNumber::is_integral() const {
  switch (state_) {
    case State::ExactZero:
      return true;
    case State::BoundedZero:
      if (valuation_ >= 0) return true;
      throw InsufficientPrecision("cannot decide integrality", 0);
    case State::Nonzero:
      break;
  }
  return valuation_ >= 0;
}

mpz_class PadicNumber::residue(std::int64_t n) const {
  if (n <= 0) return 0;
  if (n > abs_precision()) {
    throw InsufficientPrecision("residue modulo p^" + std::to_string(n) + " is not known", n);
  }
  if (!is_integral()) throw DomainError("residue of a non-integral p-adic number");
  return shifted_residue(0, n);
}

PadicNumber PadicNumber::with_precision(std::int64_t n) const {
  if (n >= abs_precision()) return *this;
  if (state_ != State::Nonzero || valuation_ >= n) return bounded_zero(prime_, n);
  return normalize_capped(prime_, unit_residue(n - valuation_), valuation_, n);
}

PadicNumber PadicNumber::operator-() const {
  if (state_ != State::Nonzero) return *this;
  PadicNumber r = *this;
  if (rel_ == kExact) {
    r.exact_unit_ = -exact_unit_;
  } else {
    r.unit_ = prime_power(prime_, rel_) - unit_;
  }
  return r;
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  require_same_prime(x, y);
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const Prime p = x.prime();
  if (x.is_exact() && y.is_exact()) {
    std::int64_t m = std::min(x.valuation_, y.valuation_);
    mpq_class s = x.exact_unit_ * mpq_class(prime_power(p, x.valuation_ - m)) +
                  y.exact_unit_ * mpq_class(prime_power(p, y.valuation_ - m));
    return PadicNumber::normalize_exact(p, s, m);
  }
  std::int64_t n = std::min(x.abs_precision(), y.abs_precision());
  std::int64_t low = std::min(x.low_index(), y.low_index());
  if (low >= n) return PadicNumber::bounded_zero(p, n);
  std::int64_t count = n - low;
  mpz_class s = x.shifted_residue(low, count) + y.shifted_residue(low, count);
  return PadicNumber::normalize_capped(p, mod_pos(s, prime_power(p, count)), low, n);
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return x + (-y); }

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  require_same_prime(x, y);
  const Prime p = x.prime();
  if (x.is_exact_zero() || y.is_exact_zero()) return PadicNumber(p);
  if (x.is_bounded_zero() || y.is_bounded_zero()) {
    return PadicNumber::bounded_zero(p, x.low_index() + y.low_index());
  }
  std::int64_t v = x.valuation_ + y.valuation_;
  if (x.is_exact() && y.is_exact()) {
    return PadicNumber::normalize_exact(p, x.exact_unit_ * y.exact_unit_, v);
  }
  std::int64_t r = std::min(x.rel_, y.rel_);
  return PadicNumber::normalize_capped(p, x.unit_residue(r) * y.unit_residue(r) % prime_power(p, r),
                                       v, v + r);
}

PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) {
  require_same_prime(x, y);
  const Prime p = x.prime();
  if (y.is_exact_zero()) throw DomainError("division by zero");
  if (y.is_bounded_zero()) {
    throw InsufficientPrecision("division by a zero known only modulo p^" +
                                std::to_string(y.abs_precision()));
  }
  if (x.is_exact_zero()) return PadicNumber(p);
  if (x.is_bounded_zero()) return PadicNumber::bounded_zero(p, x.valuation_ - y.valuation_);
  std::int64_t v = x.valuation_ - y.valuation_;
  if (x.is_exact() && y.is_exact()) {
    return PadicNumber::normalize_exact(p, x.exact_unit_ / y.exact_unit_, v);
  }
  std::int64_t r = std::min(x.rel_, y.rel_);
  mpz_class m = prime_power(p, r);
  return PadicNumber::normalize_capped(p, x.unit_residue(r) * inverse_mod(y.unit_residue(r), m) % m,
                                       v, v + r);
}

PadicNumber PadicNumber::pow(std::int64_t k) const {
  if (k < 0) return one(prime_) / pow(-k);
  PadicNumber result = one(prime_);
  PadicNumber base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool exactly_equal(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime() || !x.is_exact() || !y.is_exact()) return false;
  if (x.is_exact_zero() || y.is_exact_zero()) return x.is_exact_zero() && y.is_exact_zero();
  return x.valuation() == y.valuation() && x.exact_value() == y.exact_value();
}

bool agrees(const PadicNumber& x, const PadicNumber& y) {
  require_same_prime(x, y);
  if (x.is_exact() && y.is_exact()) return exactly_equal(x, y);
  return (x - y).is_zero();
}

}  // namespace padic
