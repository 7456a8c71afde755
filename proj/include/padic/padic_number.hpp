#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "padic/norm.hpp"
#include "padic/prime.hpp"

namespace padic {

/// An element of Q_p known either exactly or modulo p^N.
///
/// Three states:
///  - exact zero;
///  - precision-bounded zero: every known digit is 0, the value is only known
///    to lie in p^N Z_p;
///  - nonzero: x = u * p^v with u a p-adic unit.
///
/// Nonzero values are exact (u is a rational coprime to p, the value is known
/// to infinite precision) or capped (u is known modulo p^r, r the relative
/// precision, and the absolute precision is v + r).
///
/// Arithmetic propagates precision the way capped-relative p-adic arithmetic
/// does: additive operations keep the smaller absolute precision, multiplicative
/// ones the smaller relative precision. Exact operands combine exactly.
///
/// Values are immutable; all operations are pure.
class PadicNumber {
 public:
  /// Absolute/relative precision reported by exact values.
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();
  static constexpr std::int64_t kDefaultPrecision = 64;

  enum class State { ExactZero, BoundedZero, Nonzero };

  /// Exact 0.
  explicit PadicNumber(Prime p);

  static PadicNumber zero(Prime p) { return PadicNumber(p); }
  static PadicNumber bounded_zero(Prime p, std::int64_t abs_precision);
  static PadicNumber exact(Prime p, const mpq_class& value);
  static PadicNumber exact(Prime p, std::int64_t value);
  static PadicNumber one(Prime p) { return exact(p, 1); }
  /// Exact coefficient * p^k.
  static PadicNumber power_of_p(Prime p, std::int64_t k, std::int64_t coefficient = 1);

  /// num/den truncated modulo p^abs_precision. Throws DomainError for den = 0.
  static PadicNumber from_rational(const mpz_class& num, const mpz_class& den, Prime p,
                                   std::int64_t abs_precision);
  static PadicNumber from_rational(std::int64_t num, std::int64_t den, Prime p,
                                   std::int64_t abs_precision);

  /// sum digits[i] p^(valuation + i), known modulo p^abs_precision (kExact for a
  /// finite expansion). Digits must lie in [0, p).
  static PadicNumber from_digits(Prime p, std::int64_t valuation,
                                 const std::vector<std::uint32_t>& digits,
                                 std::int64_t abs_precision);

  /// u * p^valuation with u known modulo p^rel_precision; u need not be a unit.
  static PadicNumber from_residue(Prime p, std::int64_t valuation, const mpz_class& u,
                                  std::int64_t rel_precision);

  Prime prime() const noexcept { return prime_; }
  State state() const noexcept { return state_; }

  bool is_exact_zero() const noexcept { return state_ == State::ExactZero; }
  bool is_bounded_zero() const noexcept { return state_ == State::BoundedZero; }
  /// Zero to known precision (exact or bounded).
  bool is_zero() const noexcept { return state_ != State::Nonzero; }
  bool is_nonzero() const noexcept { return state_ == State::Nonzero; }
  bool is_exact() const noexcept;

  /// ord_p(x) for nonzero values; kExact (the +infinity marker) for both zeros.
  std::int64_t valuation() const noexcept;
  /// Position of the lowest possibly nonzero digit: valuation() for nonzero
  /// values, abs_precision() for bounded zeros, kExact for exact zero.
  std::int64_t low_index() const noexcept;
  std::int64_t abs_precision() const noexcept;
  /// Digits known beyond the valuation; kExact for exact values. Nonzero only.
  std::int64_t rel_precision() const;

  /// Known digits starting at the valuation, without trailing zeros.
  /// Throws DomainError for exact values with an infinite expansion.
  std::vector<std::uint32_t> digits() const;
  /// Digit of p^i. Throws InsufficientPrecision when i >= abs_precision().
  std::uint32_t digit(std::int64_t i) const;
  /// Digits of p^from ... p^(to-1).
  std::vector<std::uint32_t> digit_window(std::int64_t from, std::int64_t to) const;
  /// True when the exact value has finitely many nonzero digits.
  bool has_finite_expansion() const;

  /// Exact sum of the digits below position k.
  PadicNumber head(std::int64_t k) const;

  /// |x|_p. Throws InsufficientPrecision for a precision-bounded zero.
  Norm abs_value() const;
  /// Sound upper bound on |x|_p: p^-N for a bounded zero at precision N.
  Norm norm_bound() const;
  /// Whether |x|_p <= 1. Throws InsufficientPrecision when undecidable.
  bool is_integral() const;

  /// The unit part u (nonzero only), as an exact rational or its residue.
  mpz_class unit_residue(std::int64_t digits) const;
  /// Exact rational value; throws DomainError for capped values.
  mpq_class exact_value() const;
  /// Integer in [0, p^n) congruent to x. Requires x in Z_p, n <= abs_precision.
  mpz_class residue(std::int64_t n) const;

  /// Same value known only modulo p^min(abs_precision, n).
  PadicNumber with_precision(std::int64_t n) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
  /// Throws DomainError for an exact zero divisor and InsufficientPrecision
  /// for a bounded one.
  friend PadicNumber operator/(const PadicNumber& x, const PadicNumber& y);

  PadicNumber& operator+=(const PadicNumber& y) { return *this = *this + y; }
  PadicNumber& operator-=(const PadicNumber& y) { return *this = *this - y; }
  PadicNumber& operator*=(const PadicNumber& y) { return *this = *this * y; }
  PadicNumber& operator/=(const PadicNumber& y) { return *this = *this / y; }

  PadicNumber pow(std::int64_t k) const;

 private:
  PadicNumber(Prime p, State s) : prime_(p), state_(s) {}

  static PadicNumber normalize_exact(Prime p, mpq_class q, std::int64_t v);
  static PadicNumber normalize_capped(Prime p, mpz_class s, std::int64_t low,
                                      std::int64_t abs_precision);
  mpz_class shifted_residue(std::int64_t low, std::int64_t digits) const;

  Prime prime_;
  State state_;
  std::int64_t valuation_ = 0;  // bounded zero: its absolute precision
  std::int64_t rel_ = 0;        // kExact for exact nonzero values
  mpq_class exact_unit_;        // exact nonzero values
  mpz_class unit_;              // capped nonzero values, in [1, p^rel)
};

/// Equality modulo p^min(N_x, N_y). Exact values compare exactly.
bool agrees(const PadicNumber& x, const PadicNumber& y);
/// Both exact and equal.
bool exactly_equal(const PadicNumber& x, const PadicNumber& y);

/// p^k as an integer.
mpz_class prime_power(std::int64_t p, std::int64_t k);

/// ord_p(n) for nonzero n.
std::int64_t ord_p(const mpz_class& n, std::int64_t p);

}  // namespace padic
