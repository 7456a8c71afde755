#include "common.hpp"
#include "padic/zoo/functions.hpp"

namespace padic::zoo {

using detail::ceil_sqrt;
using detail::square_root_index;

ZooEntry sphere_fN(const Span& span) {
  const Prime p = span.prime;
  const std::int64_t cmin = detail::min_coefficient_valuation(span);
  auto eval = [span, p, cmin](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero() || cmin == PadicNumber::kExact) return PadicNumber::zero(p);
    if (x.is_bounded_zero()) {
      return PadicNumber::bounded_zero(p, std::max<std::int64_t>(1, ceil_sqrt(x.abs_precision())) + cmin);
    }
    const std::int64_t n = square_root_index(x.valuation());
    if (n == 0) return PadicNumber::zero(p);
    PadicNumber w = span.weight(static_cast<std::uint64_t>(n));
    if (w.is_zero()) return PadicNumber::zero(p);
    return w * PadicNumber::power_of_p(p, n);
  };
  auto deriv = [p](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero()) throw DomainError("sphere: f is not differentiable at 0");
    if (x.is_bounded_zero()) throw InsufficientPrecision("sphere: x may be 0", x.abs_precision() + 1);
    return PadicNumber::zero(p);
  };
  ZooEntry e{"sphere",
             PadicFunction(p, Domain::Qp, eval, [](std::int64_t m) { return m * m; }, "sphere"),
             PadicFunction(p, Domain::Qp, deriv, {}, "sphere'"),
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, -3, 6); }};
  auto cell = span.witness_cell();
  const PadicNumber c = span.lead_coefficient();
  const PadicFunction f = e.function;
  e.claims.push_back(Claim{
      "growth-ratio", "|f(p^(n^2))| / |p^(n^2)|^alpha = |c| p^((-1 + alpha n) n) for alpha in {1, 2}",
      [f, cell, c, p](const ClaimContext& ctx) {
        auto ns = detail::cell_indices(cell, detail::pick(ctx.max_index, 10));
        std::size_t good = 0;
        nlohmann::json rows = nlohmann::json::array();
        for (std::int64_t alpha : {1, 2}) {
          for (auto n : ns) {
            const PadicNumber x = PadicNumber::power_of_p(p, n * n);
            const PadicNumber fx = f(x);
            const Norm expected = c.abs_value() * Norm::power(p, (-1 + alpha * n) * n);
            const bool ok = fx.is_nonzero() && fx.abs_value() / x.abs_value().pow(alpha) == expected;
            good += ok;
            rows.push_back({{"alpha", alpha}, {"n", n}, {"ratio", fx.is_nonzero() ? (fx.abs_value() / x.abs_value().pow(alpha)).to_string() : "0"}});
          }
        }
        ClaimOutcome out;
        out.passed = !ns.empty() && good == 2 * ns.size();
        out.summary = detail::pass_count(good, 2 * ns.size(), "ratios equal to |c| p^((-1 + alpha n) n)");
        out.details = {{"rows", rows}};
        return out;
      }});
  e.claims.push_back(Claim{
      "locally-constant", "Phi_1 f(x, x + h) = 0 exactly for random nonzero x and |h| < |x|",
      [f, p](const ClaimContext& ctx) {
        std::mt19937_64 rng(ctx.seed);
        const std::int64_t samples = detail::pick(ctx.samples, 1000);
        std::int64_t good = 0;
        std::uniform_int_distribution<std::int64_t> gap(1, 20);
        for (std::int64_t i = 0; i < samples; ++i) {
          PadicNumber x = detail::random_point(rng, p, -5, 40);
          const std::int64_t vh = x.valuation() + gap(rng);
          PadicNumber h = detail::random_point(rng, p, vh, vh);
          good += phi_r(f, {x, x + h}).is_exact_zero();
        }
        ClaimOutcome out;
        out.passed = good == samples;
        out.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(samples),
                                         "quotients exactly 0");
        return out;
      }});
  e.claims.push_back(derivative_consistency_claim(e, 8, 30));
  return e;
}

ZooEntry sphere_g(const PadicNumber& beta, std::int64_t k) {
  if (beta.is_zero()) throw DomainError("sphere_g: beta must be nonzero");
  if (k < 1) throw DomainError("sphere_g: power must be at least 1");
  const Prime p = beta.prime();
  auto eval = [beta, k, p](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero()) return PadicNumber::zero(p);
    if (x.is_bounded_zero()) {
      return PadicNumber::bounded_zero(p, k * std::max<std::int64_t>(1, ceil_sqrt(x.abs_precision())) +
                                              beta.valuation());
    }
    const std::int64_t n = square_root_index(x.valuation());
    if (n == 0) return PadicNumber::zero(p);
    return beta * PadicNumber::power_of_p(p, n * k);
  };
  auto deriv = [p](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero()) throw DomainError("sphere_g: not differentiable at 0");
    if (x.is_bounded_zero()) throw InsufficientPrecision("sphere_g: x may be 0", x.abs_precision() + 1);
    return PadicNumber::zero(p);
  };
  ZooEntry e{"sphere_g",
             PadicFunction(p, Domain::Qp, eval, {}, "sphere_g"),
             PadicFunction(p, Domain::Qp, deriv, {}, "sphere_g'"),
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, -3, 6); }};
  const PadicFunction f = e.function;
  e.claims.push_back(Claim{
      "growth-ratio", "|beta g^k(p^(n^2))| / |p^(n^2)|^alpha = |beta| p^((-k + alpha n) n) for alpha in {1, 2}",
      [f, beta, k, p](const ClaimContext& ctx) {
        const std::int64_t last = detail::pick(ctx.max_index, 10);
        std::int64_t good = 0;
        for (std::int64_t alpha : {1, 2}) {
          for (std::int64_t n = 1; n <= last; ++n) {
            const PadicNumber x = PadicNumber::power_of_p(p, n * n);
            const PadicNumber fx = f(x);
            good += fx.is_nonzero() && fx.abs_value() / x.abs_value().pow(alpha) ==
                                           beta.abs_value() * Norm::power(p, (-k + alpha * n) * n);
          }
        }
        ClaimOutcome out;
        out.passed = good == 2 * last;
        out.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(2 * last),
                                         "ratios equal to |beta| p^((-k + alpha n) n)");
        return out;
      }});
  e.claims.push_back(derivative_consistency_claim(e, 8, 30));
  return e;
}

}  // namespace padic::zoo
