#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "padic/padic_number.hpp"

namespace padic::haar {

/// splitmix64 finalizer of (seed, sample, digit, attempt); the stream behind
/// every sampled digit, so any digit of any sample can be regenerated alone.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t sample, std::uint64_t digit,
                           std::uint64_t attempt = 0);

/// Uniform digit in [0, p), by rejection on counter_hash.
std::uint32_t haar_digit(Prime p, std::uint64_t seed, std::uint64_t sample, std::uint64_t position);

/// Haar-random element of Z_p known modulo p^abs_precision: digits i.i.d.
/// uniform. Throws DomainError unless abs_precision >= 1.
PadicNumber sample_Zp(Prime p, std::uint64_t seed, std::int64_t abs_precision, std::uint64_t sample = 0);

/// 1 if (x_2i, x_2i+1) = (0, 0). Throws InsufficientPrecision when digit
/// 2i+1 is unknown and DomainError outside Z_p.
int Y_i(const PadicNumber& x, std::int64_t i);

/// (Y_0 + ... + Y_(n-1)) / n.
mpq_class slln_statistic(const PadicNumber& x, std::int64_t n);

struct MCReport {
  std::int64_t samples = 0;
  double estimate = 0;
  double std_error = 0;  // sqrt(estimate (1 - estimate) / samples)
  double target = 0;
  double z_score = 0;    // (estimate - target) / std_error, 0 when std_error = 0
  std::uint64_t seed = 0;

  /// |estimate - target| <= sigmas * std_error.
  bool within(double sigmas) const;
  nlohmann::json to_json() const;
};

/// Builds a report from a success count.
MCReport make_report(std::int64_t hits, std::int64_t samples, double target, std::uint64_t seed);

/// Frequency of Y_0 = 1; target 1/p^2.
MCReport estimate_Y0(Prime p, std::int64_t samples, std::uint64_t seed);

/// Frequency of x = c mod p^n; target p^-n.
MCReport estimate_cylinder(Prime p, const mpz_class& c, std::int64_t n, std::int64_t samples, std::uint64_t seed);

/// mu{no zero pair among the first k pairs}; target (1 - 1/p^2)^k.
MCReport estimate_E_prefix(Prime p, std::int64_t k, std::int64_t samples, std::uint64_t seed);

/// estimate_E_prefix for k = 1..k_max from one shared sample set, so the
/// estimates are nonincreasing in k.
std::vector<MCReport> estimate_E_prefix_series(Prime p, std::int64_t k_max, std::int64_t samples,
                                               std::uint64_t seed);

/// Header "k,target,estimate,stderr,z_score".
void write_csv(std::ostream& out, const std::vector<MCReport>& series);

}  // namespace padic::haar
