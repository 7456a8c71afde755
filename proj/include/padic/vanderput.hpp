#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "padic/function.hpp"

namespace padic {

/// floor(log_p n) for n >= 1: the position of the leading base-p digit.
std::int64_t leading_position(const mpz_class& n, std::int64_t p);

/// n with its leading base-p digit removed (0 when n < p). Requires n >= 1.
mpz_class drop_leading_digit(const mpz_class& n, std::int64_t p);

/// e_n(x): e_0 = 1; for n >= 1, 1 iff x agrees with n on digits 0..s,
/// s = leading_position(n). Throws DomainError for x outside Z_p and
/// InsufficientPrecision when digit s of x is unknown.
int basis_eval(const mpz_class& n, const PadicNumber& x);

/// Candidate indices of nonzero coefficients: support(k) is the k-th one,
/// increasing in k. Coefficients off the support are zero.
using Support = std::function<mpz_class(std::uint64_t)>;

/// Van der Put coefficients a_0 = f(0), a_n = f(n) - f(n_) of a function on Z_p,
/// computed on demand and cached.
class VdPSeries {
 public:
  explicit VdPSeries(PadicFunction f, Support support = {});

  Prime prime() const noexcept { return f_.prime(); }
  bool sparse() const noexcept { return static_cast<bool>(support_); }

  /// k-th support index (k itself for a dense series).
  mpz_class index(std::uint64_t k) const;

  PadicNumber coefficient(const mpz_class& n) const;
  /// |a_n|_p; a coefficient that is a zero known modulo p^N reports p^-N.
  Norm norm(const mpz_class& n) const;

  /// Evaluates coefficients for the first count support indices.
  void prefetch(std::uint64_t count) const;

  /// sum over support indices k < count of a_n e_n(x).
  PadicNumber partial_sum(std::uint64_t count, const PadicNumber& x) const;

 private:
  PadicFunction f_;
  Support support_;
  std::unique_ptr<std::mutex> mutex_;
  mutable std::map<mpz_class, PadicNumber> cache_;
};

/// decompose(f, n_max): the series of f with coefficients 0..n_max (dense) or
/// support(0..n_max) evaluated up front.
VdPSeries decompose(const PadicFunction& f, std::uint64_t n_max, Support support = {});

/// ln(|a_n|_p n^alpha) for a row of a criterion table; -inf for a zero
/// coefficient.
struct CriterionRow {
  std::uint64_t k;  // position in the support
  mpz_class n;
  Norm coeff_norm;
  double log_times_n;
  double log_times_n_alpha;
  double log_running_sup;  // of |a_n| n^alpha over rows so far
};

struct WindowMax {
  std::int64_t octave;  // the window holds indices n with floor(log2 n) = octave
  double log_max;       // ln of max |a_n| n in the window
};

struct N1Report {
  std::vector<CriterionRow> rows;
  std::vector<WindowMax> windows;
  /// All coefficients zero.
  bool all_zero = false;
  /// The largest window maximum in the later half of the windows is below
  /// the largest in the earlier half.
  bool decays = false;
};

struct LipReport {
  double alpha;
  std::vector<CriterionRow> rows;
  double log_sup;
};

/// Windowed maxima of |a_n| n over the first count support indices.
N1Report n1_criterion(const VdPSeries& series, std::uint64_t count);
/// Running suprema of |a_n| n^alpha over the first count support indices.
LipReport lip_criterion(const VdPSeries& series, double alpha, std::uint64_t count);

/// exp(log_value) as text; stays readable far outside the range of double.
std::string format_log_real(double log_value);

/// Header "k,n,abs_a_n,abs_a_n_decimal,abs_a_n_times_n,abs_a_n_times_n_alpha,running_sup".
void write_csv(std::ostream& out, const LipReport& report);

}  // namespace padic
