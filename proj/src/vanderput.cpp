#include "padic/vanderput.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "padic/errors.hpp"

namespace padic {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_of(const mpz_class& n) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::string index_text(const mpz_class& n) {
  if (mpz_sizeinbase(n.get_mpz_t(), 10) <= 18) return n.get_str();
  return format_log_real(log_of(n));
}

std::vector<CriterionRow> criterion_rows(const VdPSeries& series, double alpha, std::uint64_t count) {
  series.prefetch(count);
  std::vector<CriterionRow> rows;
  rows.reserve(count);
  double sup = kNegInf;
  for (std::uint64_t k = 0; k < count; ++k) {
    mpz_class n = series.index(k);
    Norm a = series.norm(n);
    double la = a.log();
    double ln = n == 0 ? kNegInf : log_of(n);
    bool vanishes = a.is_zero() || n == 0;
    double t1 = vanishes ? kNegInf : la + ln;
    double ta = vanishes ? kNegInf : la + alpha * ln;
    sup = std::max(sup, ta);
    rows.push_back(CriterionRow{k, n, a, t1, ta, sup});
  }
  return rows;
}

}  // namespace

std::int64_t leading_position(const mpz_class& n, std::int64_t p) {
  if (n < 1) throw DomainError("leading_position needs n >= 1");
  // sizeinbase may overshoot by one for bases that are not powers of 2.
  auto s = static_cast<std::int64_t>(
      mpz_sizeinbase(n.get_mpz_t(), p <= 62 ? static_cast<int>(p) : 2));
  if (p > 62) {
    s = 0;
    mpz_class q = n;
    while (q >= p) {
      mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
      ++s;
    }
    return s;
  }
  if (prime_power(p, s - 1) > n) --s;
  return s - 1;
}

mpz_class drop_leading_digit(const mpz_class& n, std::int64_t p) {
  std::int64_t s = leading_position(n, p);
  mpz_class r;
  mpz_class ps = prime_power(p, s);
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), ps.get_mpz_t());
  return r;
}

int basis_eval(const mpz_class& n, const PadicNumber& x) {
  if (n < 0) throw DomainError("van der Put index must be nonnegative");
  if (!x.is_integral()) throw DomainError("van der Put basis is defined on Z_p");
  if (n == 0) return 1;
  const std::int64_t s = leading_position(n, x.prime().value());
  if (x.abs_precision() < s + 1) {
    throw InsufficientPrecision("e_n needs digits of x up to p^" + std::to_string(s), s + 1);
  }
  return x.residue(s + 1) == n ? 1 : 0;
}

VdPSeries::VdPSeries(PadicFunction f, Support support)
    : f_(std::move(f)), support_(std::move(support)), mutex_(std::make_unique<std::mutex>()) {}

mpz_class VdPSeries::index(std::uint64_t k) const {
  if (support_) return support_(k);
  return mpz_class(static_cast<unsigned long>(k));
}

PadicNumber VdPSeries::coefficient(const mpz_class& n) const {
  {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  const Prime p = f_.prime();
  PadicNumber a = n == 0 ? f_(PadicNumber::zero(p))
                         : f_(PadicNumber::exact(p, mpq_class(n))) -
                               f_(PadicNumber::exact(p, mpq_class(drop_leading_digit(n, p.value()))));
  std::lock_guard<std::mutex> lock(*mutex_);
  cache_.emplace(n, a);
  return a;
}

Norm VdPSeries::norm(const mpz_class& n) const { return coefficient(n).norm_bound(); }

void VdPSeries::prefetch(std::uint64_t count) const {
  for (std::uint64_t k = 0; k < count; ++k) coefficient(index(k));
}

PadicNumber VdPSeries::partial_sum(std::uint64_t count, const PadicNumber& x) const {
  PadicNumber s(prime());
  for (std::uint64_t k = 0; k < count; ++k) {
    mpz_class n = index(k);
    if (basis_eval(n, x)) s += coefficient(n);
  }
  return s;
}

VdPSeries decompose(const PadicFunction& f, std::uint64_t n_max, Support support) {
  VdPSeries s(f, std::move(support));
  s.prefetch(n_max + 1);
  return s;
}

N1Report n1_criterion(const VdPSeries& series, std::uint64_t count) {
  N1Report r;
  r.rows = criterion_rows(series, 1.0, count);
  r.all_zero = true;
  for (const auto& row : r.rows) {
    if (!row.coeff_norm.is_zero()) r.all_zero = false;
    if (row.n == 0) continue;
    auto octave = static_cast<std::int64_t>(mpz_sizeinbase(row.n.get_mpz_t(), 2)) - 1;
    if (r.windows.empty() || r.windows.back().octave != octave) r.windows.push_back({octave, kNegInf});
    r.windows.back().log_max = std::max(r.windows.back().log_max, row.log_times_n);
  }
  if (r.windows.size() >= 2) {
    std::size_t half = r.windows.size() / 2;
    double early = kNegInf;
    double late = kNegInf;
    for (std::size_t i = 0; i < r.windows.size(); ++i) {
      double& side = i < half ? early : late;
      side = std::max(side, r.windows[i].log_max);
    }
    r.decays = !r.all_zero && late < early;
  }
  return r;
}

LipReport lip_criterion(const VdPSeries& series, double alpha, std::uint64_t count) {
  if (!(alpha > 0)) throw DomainError("Lipschitz exponent must be positive");
  LipReport r{alpha, criterion_rows(series, alpha, count), kNegInf};
  if (!r.rows.empty()) r.log_sup = r.rows.back().log_running_sup;
  return r;
}

std::string format_log_real(double log_value) {
  if (log_value == kNegInf) return "0";
  std::ostringstream out;
  if (std::abs(log_value) < 600) {
    out << std::setprecision(9) << std::exp(log_value);
    return out.str();
  }
  double l10 = log_value / std::log(10.0);
  double e = std::floor(l10);
  double mant = std::pow(10.0, l10 - e);
  if (mant >= 9.9999999995) {
    mant /= 10;
    e += 1;
  }
  out << std::fixed << std::setprecision(8) << mant << "e" << (e >= 0 ? "+" : "") << static_cast<long long>(e);
  return out.str();
}

void write_csv(std::ostream& out, const LipReport& report) {
  out << "k,n,abs_a_n,abs_a_n_decimal,abs_a_n_times_n,abs_a_n_times_n_alpha,running_sup\n";
  for (const auto& r : report.rows) {
    out << r.k << ',' << index_text(r.n) << ',' << r.coeff_norm.to_string() << ','
        << format_log_real(r.coeff_norm.log()) << ',' << format_log_real(r.log_times_n) << ','
        << format_log_real(r.log_times_n_alpha) << ',' << format_log_real(r.log_running_sup) << '\n';
  }
}

}  // namespace padic
