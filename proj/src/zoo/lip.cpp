#include <cmath>

#include "common.hpp"
#include "padic/vanderput.hpp"
#include "padic/zoo/balls.hpp"
#include "padic/zoo/functions.hpp"

namespace padic::zoo {

namespace {

// p^(m_sigma(n)) * weight(n).
PadicNumber lip_coefficient(const Span& span, std::uint64_t n) {
  PadicNumber w = span.weight(n);
  if (w.is_zero()) return w;
  return w * PadicNumber::power_of_p(span.prime, m_schedule(sigma(n, span.prime), span.prime));
}

}  // namespace

ZooEntry lip_fN(const Span& span, std::int64_t /*precision*/) {
  const Prime p = span.prime;
  const std::int64_t cmin = detail::min_coefficient_valuation(span);
  auto eval = [span, p, cmin](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero() || cmin == PadicNumber::kExact) return PadicNumber::zero(p);
    if (x.is_bounded_zero()) {
      // Every ball still possible has index >= N(p-1), and m is nondecreasing.
      const std::int64_t n_low = std::max<std::int64_t>(0, x.abs_precision());
      const auto first = static_cast<std::uint64_t>(n_low * (p.value() - 1));
      return PadicNumber::bounded_zero(p, m_schedule(sigma(first, p), p) + cmin);
    }
    const std::int64_t j = x.valuation();
    return lip_coefficient(span, sigma_index(j, x.digit(j), p));
  };
  // m_sigma(N(p-1)) = m_(p^N) >= N, so N input digits settle N output digits.
  ZooEntry e{"lip",
             PadicFunction(p, Domain::Zp, eval, [](std::int64_t m) { return std::max<std::int64_t>(m, 1); }, "lip"),
             PadicFunction::constant(PadicNumber::zero(p), Domain::Zp),
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, 0, 6); }};

  const PadicFunction f = e.function;
  const Support support = [p](std::uint64_t k) { return sigma(k, p); };
  const double log_p = std::log(static_cast<double>(p.value()));

  e.claims.push_back(Claim{
      "coefficient-readback",
      "van der Put coefficients are p^m_sigma(n) on sigma(N) and vanish elsewhere",
      [f, span, support, p](const ClaimContext& ctx) {
        const auto count = static_cast<std::uint64_t>(detail::pick(ctx.max_index, 200));
        auto series = decompose(f, count, support);
        std::size_t good = 0;
        for (std::uint64_t n = 0; n < count; ++n) {
          good += exactly_equal(series.coefficient(sigma(n, p)), lip_coefficient(span, n));
        }
        // Off the support, checked densely on small indices.
        VdPSeries dense(f);
        std::set<mpz_class> image;
        for (std::uint64_t n = 0; n < 64; ++n) image.insert(sigma(n, p));
        const mpz_class p6 = prime_power(p, 6);
        const std::int64_t dense_limit = p6 < 4096 ? p6.get_si() : 4096;
        std::size_t off = 0;
        std::size_t off_good = 0;
        for (std::int64_t n = 1; n < dense_limit; ++n) {
          if (image.count(mpz_class(n))) continue;
          ++off;
          off_good += dense.coefficient(mpz_class(n)).is_exact_zero();
        }
        ClaimOutcome out;
        out.passed = good == count && off_good == off;
        out.summary = detail::pass_count(good, count, "support coefficients match") + ", " +
                      detail::pass_count(off_good, off, "off-support coefficients vanish");
        return out;
      }});
  e.claims.push_back(Claim{
      "n1-criterion",
      "|a_sigma(n)| sigma(n) <= p / ln n for 2 <= n <= count, and windowed maxima of |a_n| n decay",
      [f, support, log_p](const ClaimContext& ctx) {
        const auto count = static_cast<std::uint64_t>(detail::pick(ctx.max_index, 10000));
        auto series = decompose(f, count, support);
        auto report = n1_criterion(series, count);
        std::size_t checked = 0;
        std::size_t good = 0;
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& row : report.rows) {
          if (row.k < 2) continue;
          ++checked;
          const double bound = log_p - std::log(std::log(static_cast<double>(row.k)));
          if (row.log_times_n <= bound) {
            ++good;
          } else if (violations.size() < 5) {
            violations.push_back({{"k", row.k}, {"log_value", row.log_times_n}, {"log_bound", bound}});
          }
        }
        ClaimOutcome out;
        out.passed = checked > 0 && good == checked && report.decays;
        out.summary = detail::pass_count(good, checked, "rows within p/ln n") +
                      (report.decays ? ", window maxima decay" : ", window maxima do not decay");
        nlohmann::json windows = nlohmann::json::array();
        for (const auto& w : report.windows) windows.push_back({{"octave", w.octave}, {"max", format_log_real(w.log_max)}});
        out.details = {{"count", count}, {"windows", windows}, {"violations", violations}};
        return out;
      }});
  e.claims.push_back(Claim{
      "lip-fails", "running sup of |a_n| n^2 exceeds 10^2 within the first count support indices",
      [f, support](const ClaimContext& ctx) {
        const auto count = static_cast<std::uint64_t>(detail::pick(ctx.max_index, 10000));
        auto series = decompose(f, count, support);
        auto report = lip_criterion(series, 2.0, count);
        ClaimOutcome out;
        out.passed = report.log_sup > std::log(100.0);
        out.summary = "sup |a_n| n^2 = " + format_log_real(report.log_sup);
        out.details = {{"count", count}, {"log_sup", report.log_sup}};
        return out;
      }});
  e.claims.push_back(Claim{"balls-disjoint", "the van der Put balls of sigma(0..bound) are pairwise disjoint",
                           [p](const ClaimContext& ctx) {
                             auto bound = detail::pick(ctx.max_index, 50);
                             auto overlap = vdp_balls(p, bound).first_overlap(static_cast<std::size_t>(bound));
                             ClaimOutcome out;
                             out.passed = overlap < 0;
                             out.summary = out.passed ? "disjoint up to index " + std::to_string(bound)
                                                      : "overlap at index " + std::to_string(overlap);
                             return out;
                           }});
  e.claims.push_back(derivative_consistency_claim(e, 8, 30));
  return e;
}

}  // namespace padic::zoo
