#include "padic/haar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "padic/errors.hpp"

namespace padic::haar {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Runs body(begin, end) over [0, n) in contiguous chunks and sums the results.
// The sum is independent of the chunking.
template <class Body>
std::vector<std::int64_t> parallel_counts(std::int64_t n, std::size_t width, Body body) {
  const std::int64_t hw = std::max<std::int64_t>(1, std::thread::hardware_concurrency());
  const std::int64_t workers = std::clamp<std::int64_t>(n / 20000, 1, hw);
  std::vector<std::vector<std::int64_t>> parts(static_cast<std::size_t>(workers),
                                               std::vector<std::int64_t>(width, 0));
  std::vector<std::thread> threads;
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t lo = n * w / workers;
    const std::int64_t hi = n * (w + 1) / workers;
    auto& out = parts[static_cast<std::size_t>(w)];
    if (workers == 1) {
      body(lo, hi, out);
    } else {
      threads.emplace_back([&body, lo, hi, &out] { body(lo, hi, out); });
    }
  }
  for (auto& t : threads) t.join();
  std::vector<std::int64_t> total(width, 0);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < width; ++i) total[i] += part[i];
  }
  return total;
}

void check_samples(std::int64_t samples) {
  if (samples < 1) throw DomainError("need at least one sample");
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t sample, std::uint64_t digit, std::uint64_t attempt) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ sample);
  h = splitmix(h ^ digit);
  return splitmix(h ^ attempt);
}

std::uint32_t haar_digit(Prime p, std::uint64_t seed, std::uint64_t sample, std::uint64_t position) {
  const auto q = static_cast<std::uint64_t>(p.value());
  // Largest multiple of q representable; draws at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % q;
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::uint64_t h = counter_hash(seed, sample, position, attempt);
    if (h < limit) return static_cast<std::uint32_t>(h % q);
  }
}

PadicNumber sample_Zp(Prime p, std::uint64_t seed, std::int64_t abs_precision, std::uint64_t sample) {
  if (abs_precision < 1) throw DomainError("sample_Zp: precision must be at least 1");
  std::vector<std::uint32_t> ds(static_cast<std::size_t>(abs_precision));
  for (std::int64_t i = 0; i < abs_precision; ++i) {
    ds[static_cast<std::size_t>(i)] = haar_digit(p, seed, sample, static_cast<std::uint64_t>(i));
  }
  return PadicNumber::from_digits(p, 0, ds, abs_precision);
}

int Y_i(const PadicNumber& x, std::int64_t i) {
  if (i < 0) throw DomainError("Y_i: negative index");
  if (!x.is_integral()) throw DomainError("Y_i: x must lie in Z_p");
  return x.digit(2 * i) == 0 && x.digit(2 * i + 1) == 0 ? 1 : 0;
}

mpq_class slln_statistic(const PadicNumber& x, std::int64_t n) {
  if (n < 1) throw DomainError("slln_statistic: n must be at least 1");
  if (!x.is_integral()) throw DomainError("slln_statistic: x must lie in Z_p");
  if (!x.is_exact() && x.abs_precision() < 2 * n) {
    throw InsufficientPrecision("slln_statistic: need " + std::to_string(2 * n) + " digits", 2 * n);
  }
  auto ds = x.digit_window(0, 2 * n);
  long hits = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    hits += ds[static_cast<std::size_t>(2 * i)] == 0 && ds[static_cast<std::size_t>(2 * i + 1)] == 0;
  }
  mpq_class r(hits, static_cast<unsigned long>(n));
  r.canonicalize();
  return r;
}

bool MCReport::within(double sigmas) const { return std::abs(estimate - target) <= sigmas * std_error; }

nlohmann::json MCReport::to_json() const {
  return {{"samples", samples}, {"estimate", estimate}, {"stderr", std_error},
          {"target", target},   {"z_score", z_score},   {"seed", seed}};
}

MCReport make_report(std::int64_t hits, std::int64_t samples, double target, std::uint64_t seed) {
  check_samples(samples);
  MCReport r;
  r.samples = samples;
  r.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  r.std_error = std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(samples));
  r.target = target;
  r.z_score = r.std_error > 0 ? (r.estimate - target) / r.std_error : 0.0;
  r.seed = seed;
  return r;
}

MCReport estimate_Y0(Prime p, std::int64_t samples, std::uint64_t seed) {
  check_samples(samples);
  auto counts = parallel_counts(samples, 1, [&](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& out) {
    for (std::int64_t s = lo; s < hi; ++s) {
      const auto u = static_cast<std::uint64_t>(s);
      out[0] += haar_digit(p, seed, u, 0) == 0 && haar_digit(p, seed, u, 1) == 0;
    }
  });
  const double q = static_cast<double>(p.value());
  return make_report(counts[0], samples, 1 / (q * q), seed);
}

MCReport estimate_cylinder(Prime p, const mpz_class& c, std::int64_t n, std::int64_t samples, std::uint64_t seed) {
  check_samples(samples);
  if (n < 1) throw DomainError("cylinder depth must be at least 1");
  // Digits of c mod p^n, compared position by position.
  std::vector<std::uint32_t> target_digits(static_cast<std::size_t>(n));
  mpz_class r = c % prime_power(p.value(), n);
  if (r < 0) r += prime_power(p.value(), n);
  for (auto& d : target_digits) {
    mpz_class q = r % p.value();
    d = static_cast<std::uint32_t>(q.get_ui());
    r /= p.value();
  }
  auto counts = parallel_counts(samples, 1, [&](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& out) {
    for (std::int64_t s = lo; s < hi; ++s) {
      bool hit = true;
      for (std::int64_t i = 0; i < n && hit; ++i) {
        hit = haar_digit(p, seed, static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(i)) ==
              target_digits[static_cast<std::size_t>(i)];
      }
      out[0] += hit;
    }
  });
  return make_report(counts[0], samples, std::pow(static_cast<double>(p.value()), -static_cast<double>(n)), seed);
}

std::vector<MCReport> estimate_E_prefix_series(Prime p, std::int64_t k_max, std::int64_t samples,
                                               std::uint64_t seed) {
  if (k_max < 1) throw DomainError("E-prefix length must be at least 1");
  check_samples(samples);
  const auto width = static_cast<std::size_t>(k_max);
  // counts[k-1]: samples whose first k pairs are all nonzero.
  auto counts = parallel_counts(samples, width, [&](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& out) {
    for (std::int64_t s = lo; s < hi; ++s) {
      const auto u = static_cast<std::uint64_t>(s);
      for (std::int64_t i = 0; i < k_max; ++i) {
        const auto pos = static_cast<std::uint64_t>(2 * i);
        if (haar_digit(p, seed, u, pos) == 0 && haar_digit(p, seed, u, pos + 1) == 0) break;
        ++out[static_cast<std::size_t>(i)];
      }
    }
  });
  const double q = static_cast<double>(p.value());
  std::vector<MCReport> series;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    series.push_back(make_report(counts[static_cast<std::size_t>(k - 1)], samples,
                                 std::pow(1 - 1 / (q * q), static_cast<double>(k)), seed));
  }
  return series;
}

MCReport estimate_E_prefix(Prime p, std::int64_t k, std::int64_t samples, std::uint64_t seed) {
  return estimate_E_prefix_series(p, k, samples, seed).back();
}

void write_csv(std::ostream& out, const std::vector<MCReport>& series) {
  out << "k,target,estimate,stderr,z_score\n";
  out.precision(17);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& r = series[i];
    out << i + 1 << ',' << r.target << ',' << r.estimate << ',' << r.std_error << ',' << r.z_score << '\n';
  }
}

}  // namespace padic::haar
