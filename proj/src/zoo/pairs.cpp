#include <set>

#include "common.hpp"
#include "padic/zoo/functions.hpp"

namespace padic::zoo {

namespace {

constexpr std::int64_t kMaxExactPairs = 100000;

// Digit pairs of an exact rational in Z_p: r -> (d0, d1, (r - d0 - d1 p) / p^2).
// The tail sequence is eventually periodic, so a repeated tail with no zero
// pair so far means there is none at all.
std::int64_t first_zero_pair_exact(const mpq_class& q, std::int64_t p) {
  const mpz_class pz(static_cast<unsigned long>(p));
  const mpz_class den = q.get_den();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  mpz_class num = q.get_num();
  std::set<mpz_class> seen;
  auto next_digit = [&]() {
    mpz_class d = num * inv;
    mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
    num -= d * den;
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    return d;
  };
  for (std::int64_t i = 0; i < kMaxExactPairs; ++i) {
    if (!seen.insert(num).second) return -1;
    mpz_class d0 = next_digit();
    mpz_class d1 = next_digit();
    if (d0 == 0 && d1 == 0) return i;
  }
  throw InsufficientPrecision("digit pairs did not become periodic within the search budget");
}

// First zero pair scanned up to `limit` pairs; -1 if none. Capped inputs stop
// at their last complete pair.
std::int64_t scan_pairs(const PadicNumber& x, std::int64_t limit, bool& exhausted) {
  exhausted = false;
  if (x.is_exact_zero()) return 0;
  if (x.is_exact()) {
    std::int64_t i = first_zero_pair_exact(x.exact_value(), x.prime().value());
    return (i >= 0 && i < limit) ? i : -1;
  }
  const std::int64_t known = x.abs_precision() / 2;
  const std::int64_t upto = std::min(limit, known);
  if (upto <= 0) {
    exhausted = limit > 0;
    return -1;
  }
  auto ds = x.digit_window(0, 2 * upto);
  for (std::int64_t i = 0; i < upto; ++i) {
    if (ds[static_cast<std::size_t>(2 * i)] == 0 && ds[static_cast<std::size_t>(2 * i + 1)] == 0) return i;
  }
  exhausted = upto < limit;
  return -1;
}

void require_integral(const PadicNumber& x) {
  if (!x.is_integral()) throw DomainError("expected an element of Z_p");
}

}  // namespace

std::int64_t first_zero_pair(const PadicNumber& x, std::int64_t k) {
  require_integral(x);
  bool exhausted = false;
  std::int64_t i = scan_pairs(x, k, exhausted);
  if (exhausted) {
    throw InsufficientPrecision("need digits up to p^" + std::to_string(2 * k - 1), 2 * k);
  }
  return i;
}

bool E_prefix_member(const PadicNumber& x, std::int64_t k) { return first_zero_pair(x, k) < 0; }

ZooEntry pair_f(Prime p, std::int64_t /*precision*/) {
  auto eval = [p](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero()) return PadicNumber::zero(p);
    if (x.is_bounded_zero()) {
      if (x.abs_precision() >= 2) return PadicNumber::zero(p);
      throw InsufficientPrecision("pair_f: first digit pair unknown", 2);
    }
    if (x.is_exact()) {
      std::int64_t i = first_zero_pair_exact(x.exact_value(), p.value());
      if (i < 0) return x;
      return x.head(2 * i);
    }
    bool exhausted = false;
    std::int64_t i = scan_pairs(x, x.abs_precision() / 2, exhausted);
    if (i >= 0) return x.head(2 * i);
    if (x.abs_precision() < 2) throw InsufficientPrecision("pair_f: first digit pair unknown", 2);
    // Any later zero pair truncates at or beyond the known pairs.
    return x.with_precision(2 * (x.abs_precision() / 2));
  };
  ZooEntry e{"pair_f",
             PadicFunction(p, Domain::Zp, eval, [](std::int64_t m) { return m + 2; }, "pair_f"),
             std::nullopt,
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, 0, 3, 24); }};
  const PadicFunction f = e.function;
  e.claims.push_back(Claim{
      "continuity-modulus", "|x - y| < p^-(2m+1) implies |f(x) - f(y)| < p^-(2m+1), m = 1..10",
      [f, p](const ClaimContext& ctx) {
        std::mt19937_64 rng(ctx.seed);
        const std::int64_t samples = detail::pick(ctx.samples, 10000);
        const std::int64_t last_m = detail::pick(ctx.max_index, 10);
        std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(p.value() - 1));
        std::int64_t total = 0;
        std::int64_t good = 0;
        nlohmann::json failures = nlohmann::json::array();
        for (std::int64_t m = 1; m <= last_m; ++m) {
          const Norm bound = Norm::power(p, -(2 * m + 1));
          for (std::int64_t i = 0; i < samples; ++i) {
            // Digits of x biased towards zero pairs so all three cases occur.
            std::vector<std::uint32_t> ds(static_cast<std::size_t>(2 * m + 12));
            for (auto& d : ds) d = (rng() % 3 == 0) ? 0 : digit(rng);
            PadicNumber x = PadicNumber::from_digits(p, 0, ds, PadicNumber::kExact);
            PadicNumber y = x + detail::random_point(rng, p, 2 * m + 2, 2 * m + 8);
            ++total;
            const bool ok = (f(x) - f(y)).norm_bound() < bound;
            good += ok;
            if (!ok && failures.size() < 5) failures.push_back({{"m", m}, {"x", to_string(x)}, {"y", to_string(y)}});
          }
        }
        ClaimOutcome out;
        out.passed = good == total;
        out.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(total),
                                         "pairs within the modulus");
        out.details = {{"failures", failures}};
        return out;
      }});
  e.claims.push_back(Claim{
      "E-deviation",
      "|Phi_1 f(x, xbar_n) - 1| is p^-2 or p^-1 at sampled points x of E, xbar_n = sum_{i<=2n+1} x_i p^i + p^(2n+4)",
      [f, p](const ClaimContext& ctx) {
        std::mt19937_64 rng(ctx.seed);
        const std::int64_t points = detail::pick(ctx.samples, 20);
        const std::int64_t last_n = detail::pick(ctx.max_index, 30);
        const std::uint32_t pv = static_cast<std::uint32_t>(p.value());
        std::uniform_int_distribution<std::uint32_t> pair(1, pv * pv - 1);
        std::uniform_int_distribution<std::int64_t> prefix_len(1, 10);
        const Norm lo = Norm::power(p, -2);
        const Norm hi = Norm::power(p, -1);
        std::int64_t total = 0;
        std::int64_t good = 0;
        nlohmann::json samples = nlohmann::json::array();
        const PadicNumber one = PadicNumber::one(p);
        for (std::int64_t s = 0; s < points; ++s) {
          // Random nonzero pairs, then (1, 0) forever: an exact member of E.
          const std::int64_t k = prefix_len(rng);
          std::vector<std::uint32_t> ds;
          for (std::int64_t i = 0; i < k; ++i) {
            const std::uint32_t v = pair(rng);
            ds.push_back(v % pv);
            ds.push_back(v / pv);
          }
          PadicNumber x = PadicNumber::from_digits(p, 0, ds, PadicNumber::kExact) +
                          PadicNumber::power_of_p(p, 2 * k) / (one - PadicNumber::exact(p, p.value() * p.value()));
          Norm worst = Norm::zero(p);
          for (std::int64_t n = 0; n <= last_n; ++n) {
            PadicNumber xbar = x.head(2 * n + 2) + PadicNumber::power_of_p(p, 2 * n + 4);
            const Norm dev = (phi_r(f, {x, xbar}) - one).norm_bound();
            ++total;
            good += dev == lo || dev == hi;
            if (worst.is_zero() || dev < worst) worst = dev;
          }
          samples.push_back({{"x", to_string(x)}, {"min_deviation", worst.to_string()}});
        }
        ClaimOutcome out;
        out.passed = good == total;
        out.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(total),
                                         "deviations in {p^-2, p^-1}");
        out.details = {{"points", samples}};
        return out;
      }});
  return e;
}

ZooEntry pair_g(Prime p, std::int64_t precision) {
  const PadicFunction f = pair_f(p, precision).function;
  auto eval = [f, p](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero()) return PadicNumber::zero(p);
    if (x.is_bounded_zero()) return PadicNumber::bounded_zero(p, x.abs_precision());
    const std::int64_t n = x.valuation();
    if (n < 1 || x.digit(n) != 1) return PadicNumber::zero(p);
    PadicNumber rest = (x - PadicNumber::power_of_p(p, n)) * PadicNumber::power_of_p(p, -(n + 1));
    return PadicNumber::power_of_p(p, n) * f(rest);
  };
  ZooEntry e{"pair_g",
             PadicFunction(p, Domain::Zp, eval, [](std::int64_t m) { return m + 2; }, "pair_g"),
             std::nullopt,
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, 0, 6, 24); }};
  const PadicNumber one = PadicNumber::one(p);
  const PadicNumber ones = one / (one - PadicNumber::exact(p, p.value()));
  e.witnesses.emplace("g-at-0", PointWitness{PadicNumber::zero(p), [p, ones]() -> PointSequence {
                        auto n = std::make_shared<std::int64_t>(0);
                        return [p, ones, n]() -> std::optional<SamplePoint> {
                          ++*n;
                          return SamplePoint{*n, PadicNumber::power_of_p(p, *n) * ones};
                        };
                      }});
  e.witnesses.emplace("g-at-0-flat", PointWitness{PadicNumber::zero(p), [p]() -> PointSequence {
                        auto n = std::make_shared<std::int64_t>(0);
                        return [p, n]() -> std::optional<SamplePoint> {
                          ++*n;
                          return SamplePoint{*n, PadicNumber::power_of_p(p, *n) + PadicNumber::power_of_p(p, *n + 3)};
                        };
                      }});
  const PadicFunction g = e.function;
  const auto w1 = std::get<PointWitness>(e.witnesses.at("g-at-0"));
  const auto w2 = std::get<PointWitness>(e.witnesses.at("g-at-0-flat"));
  e.claims.push_back(Claim{
      "g-at-0",
      "Phi_1 g(x_n, 0) = 1 along x_n = p^n / (1 - p) but 0 along p^n + p^(n+3), so g'(0) does not exist",
      [g, w1, w2](const ClaimContext& ctx) {
        const std::int64_t count = detail::pick(ctx.max_index, 40);
        auto t1 = probe_derivative(g, w1.base, w1.make(), count);
        auto t2 = probe_derivative(g, w2.base, w2.make(), count);
        std::int64_t ones_ok = 0;
        std::int64_t zeros_ok = 0;
        for (const auto& r : t1.rows) ones_ok += r.norm_exact && r.norm.exponent() == 0 && !r.norm.is_zero();
        for (const auto& r : t2.rows) zeros_ok += r.quotient.is_exact_zero();
        ClaimOutcome out;
        out.passed = ones_ok == count && zeros_ok == count;
        out.summary = detail::pass_count(static_cast<std::size_t>(ones_ok), static_cast<std::size_t>(count),
                                         "quotient norms equal to 1") +
                      ", " +
                      detail::pass_count(static_cast<std::size_t>(zeros_ok), static_cast<std::size_t>(count),
                                         "quotients 0 along the second sequence");
        out.details = {{"trace", to_json(t1)}, {"flat_trace", to_json(t2)}};
        return out;
      }});
  return e;
}

ZooEntry pair_fN(const Span& span, std::int64_t precision) {
  const Prime p = span.prime;
  const PadicFunction g = pair_g(p, precision).function;
  const std::int64_t cmin = detail::min_coefficient_valuation(span);
  auto eval = [g, span, p, cmin](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero() || cmin == PadicNumber::kExact) return PadicNumber::zero(p);
    if (x.is_bounded_zero()) return PadicNumber::bounded_zero(p, x.abs_precision() + cmin);
    const std::int64_t n = x.valuation();
    if (n < 1 || x.digit(n) != 1) return PadicNumber::zero(p);
    PadicNumber w = span.weight(static_cast<std::uint64_t>(n));
    if (w.is_zero()) return PadicNumber::zero(p);
    return w * g(x);
  };
  ZooEntry e{"pair_fN",
             PadicFunction(p, Domain::Zp, eval, [](std::int64_t m) { return m + 2; }, "pair_fN"),
             std::nullopt,
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, 0, 6, 24); }};
  auto cell = span.witness_cell();
  const PadicNumber c = span.lead_coefficient();
  const PadicFunction f = e.function;
  e.claims.push_back(Claim{
      "independence", "f(p^n / (1 - p)) = c p^n / (1 - p) on the witness cell",
      [f, cell, c, p](const ClaimContext& ctx) {
        auto ns = detail::cell_indices(cell, detail::pick(ctx.max_index, 40));
        const PadicNumber one = PadicNumber::one(p);
        const PadicNumber ones = one / (one - PadicNumber::exact(p, p.value()));
        std::size_t good = 0;
        for (auto n : ns) {
          const PadicNumber x = PadicNumber::power_of_p(p, n) * ones;
          good += exactly_equal(f(x), c * x);
        }
        ClaimOutcome out;
        out.passed = !ns.empty() && good == ns.size();
        out.summary = detail::pass_count(good, ns.size(), "witness values equal to c x");
        return out;
      }});
  return e;
}

ZooEntry zero_entry(Prime p) {
  ZooEntry e{"zero",
             PadicFunction::constant(PadicNumber::zero(p)),
             PadicFunction::constant(PadicNumber::zero(p)),
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, -3, 6); }};
  e.claims.push_back(derivative_consistency_claim(e, 1, 30));
  return e;
}

ZooEntry identity_entry(Prime p) {
  ZooEntry e{"identity",
             PadicFunction::identity(p),
             PadicFunction::constant(PadicNumber::one(p)),
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, -3, 6); }};
  e.claims.push_back(derivative_consistency_claim(e, 1, 30));
  return e;
}

}  // namespace padic::zoo
