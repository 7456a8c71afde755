#include <algorithm>
#include <memory>

#include "common.hpp"
#include "padic/zoo/balls.hpp"
#include "padic/zoo/functions.hpp"

namespace padic::zoo {

using detail::cell_indices;
using detail::pick;

ZooEntry bump_fN(const Span& span, std::int64_t /*precision*/) {
  const Prime p = span.prime;
  const std::int64_t cmin = detail::min_coefficient_valuation(span);
  auto eval = [span, p, cmin](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero() || cmin == PadicNumber::kExact) return PadicNumber::zero(p);
    if (x.is_bounded_zero()) {
      // Only balls with n >= N remain possible; their values lie in p^(2N) Z_p.
      if (x.abs_precision() >= 1) return PadicNumber::bounded_zero(p, 2 * x.abs_precision() + cmin);
      throw InsufficientPrecision("bump: cannot place x relative to the balls", 1);
    }
    const std::int64_t n = x.valuation();
    if (n < 1) return PadicNumber::zero(p);
    PadicNumber w = span.weight(static_cast<std::uint64_t>(n));
    if (w.is_zero()) return PadicNumber::zero(p);
    if (!contains(Ball{PadicNumber::power_of_p(p, n), 2 * n + 1}, x)) return PadicNumber::zero(p);
    return w * PadicNumber::power_of_p(p, 2 * n);
  };
  ZooEntry e{"bump",
             PadicFunction(p, Domain::Qp, eval, [](std::int64_t m) { return (m + 1) / 2 + 1; }, "bump"),
             PadicFunction::constant(PadicNumber::zero(p)),
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, -3, 6); }};

  auto cell = span.witness_cell();
  const PadicNumber alpha = span.lead_coefficient();
  e.witnesses.emplace("strict-pairs", PairWitness{[cell, p]() -> PairSequence {
                        auto c = std::make_shared<CellEnumerator>(cell);
                        return [c, p]() -> std::optional<SamplePair> {
                          auto n = static_cast<std::int64_t>(c->next());
                          auto x = PadicNumber::power_of_p(p, n);
                          return SamplePair{n, x, x - PadicNumber::power_of_p(p, 2 * n)};
                        };
                      }});
  e.witnesses.emplace("derivative-at-0", PointWitness{PadicNumber::zero(p), [cell, p]() -> PointSequence {
                        auto c = std::make_shared<CellEnumerator>(cell);
                        return [c, p]() -> std::optional<SamplePoint> {
                          auto n = static_cast<std::int64_t>(c->next());
                          return SamplePoint{n, PadicNumber::power_of_p(p, n)};
                        };
                      }});

  const PadicFunction f = e.function;
  const auto strict = std::get<PairWitness>(e.witnesses.at("strict-pairs"));
  e.claims.push_back(Claim{
      "strict-fail", "Phi_1 f(p^n, p^n - p^2n) equals the leading coefficient along the witness cell, while f' = 0",
      [f, strict, cell, alpha](const ClaimContext& ctx) {
        auto ns = cell_indices(cell, pick(ctx.max_index, 40));
        auto trace = probe_strict(f, strict.make(), static_cast<std::int64_t>(ns.size()));
        std::size_t good = 0;
        for (const auto& r : trace.rows) good += exactly_equal(r.quotient, alpha);
        ClaimOutcome out;
        out.passed = !ns.empty() && good == ns.size();
        out.summary = detail::pass_count(good, ns.size(), "quotients equal to " + to_string(alpha));
        out.details = {{"expected", to_string(alpha)}, {"trace", to_json(trace)}};
        return out;
      }});
  const auto at0 = std::get<PointWitness>(e.witnesses.at("derivative-at-0"));
  e.claims.push_back(Claim{
      "derivative-at-0", "|f(p^n)/p^n| = |c| p^-n along the witness cell, so f'(0) = 0",
      [f, at0, cell, alpha, p](const ClaimContext& ctx) {
        auto ns = cell_indices(cell, pick(ctx.max_index, 40));
        auto trace = probe_derivative(f, at0.base, at0.make(), static_cast<std::int64_t>(ns.size()));
        std::size_t good = 0;
        for (const auto& r : trace.rows) {
          good += r.norm_exact && r.norm == alpha.abs_value() * Norm::power(p, -r.index);
        }
        ClaimOutcome out;
        out.passed = !ns.empty() && good == ns.size();
        out.summary = detail::pass_count(good, ns.size(), "quotient norms equal to |c| p^-n");
        out.details = {{"coefficient_norm", alpha.abs_value().to_string()}, {"trace", to_json(trace)}};
        return out;
      }});
  e.claims.push_back(Claim{
      "independence", "f(p^n) = c p^2n on the witness cell isolates the leading coefficient",
      [f, cell, alpha, p](const ClaimContext& ctx) {
        auto ns = cell_indices(cell, pick(ctx.max_index, 40));
        std::size_t good = 0;
        for (auto n : ns) {
          good += exactly_equal(f(PadicNumber::power_of_p(p, n)), alpha * PadicNumber::power_of_p(p, 2 * n));
        }
        ClaimOutcome out;
        out.passed = !ns.empty() && good == ns.size();
        out.summary = detail::pass_count(good, ns.size(), "witness values equal to c p^2n");
        return out;
      }});
  e.claims.push_back(Claim{"balls-disjoint", "the balls p^n + p^(2n+1) Z_p are pairwise disjoint",
                           [p](const ClaimContext& ctx) {
                             auto bound = pick(ctx.max_index, 50);
                             auto overlap = bump_balls(p, bound).first_overlap(static_cast<std::size_t>(bound));
                             ClaimOutcome out;
                             out.passed = overlap < 0;
                             out.summary = out.passed ? "disjoint up to n = " + std::to_string(bound)
                                                      : "overlap at n = " + std::to_string(overlap + 1);
                             return out;
                           }});
  e.claims.push_back(derivative_consistency_claim(e, 14, 30));
  return e;
}

ZooEntry spread_gN(const Span& span, std::int64_t precision) {
  const Prime p = span.prime;
  const std::int64_t cmin = detail::min_coefficient_valuation(span);
  auto eval = [span, p, cmin, precision](const PadicNumber& x) -> PadicNumber {
    if (x.is_exact_zero() || cmin == PadicNumber::kExact) return PadicNumber::zero(p);
    // Digits 0..L-1 are used; the rest contribute below p^(2L).
    bool exact = x.is_exact() && x.has_finite_expansion();
    std::int64_t len = 0;
    if (exact) {
      len = x.valuation() + static_cast<std::int64_t>(x.digits().size());
    } else {
      len = std::min(x.abs_precision(), precision);
    }
    len = std::max<std::int64_t>(len, 0);
    std::int64_t from = std::max<std::int64_t>(0, std::min(x.low_index(), len));
    auto ds = x.digit_window(from, len);
    PadicNumber s(p);
    for (std::int64_t n = from; n < len; ++n) {
      auto d = ds[static_cast<std::size_t>(n - from)];
      if (d == 0) continue;
      PadicNumber w = span.weight(static_cast<std::uint64_t>(n));
      if (!w.is_zero()) s += w * PadicNumber::power_of_p(p, 2 * n, d);
    }
    return exact ? s : s.with_precision(2 * len + cmin);
  };
  ZooEntry e{"spread",
             PadicFunction(p, Domain::Qp, eval, [](std::int64_t m) { return (m + 1) / 2; }, "spread"),
             PadicFunction::constant(PadicNumber::zero(p)),
             {},
             {},
             std::nullopt,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, -3, 6); }};

  auto cell = span.witness_cell();
  const PadicNumber beta = span.lead_coefficient();
  e.witnesses.emplace("second-order-triples", TripleWitness{[cell, p]() -> TripleSequence {
                        auto c = std::make_shared<CellEnumerator>(cell);
                        return [c, p]() -> std::optional<SampleTriple> {
                          auto n = c->next();
                          auto next = c->next_after(n);
                          auto x = PadicNumber::power_of_p(p, static_cast<std::int64_t>(n));
                          return SampleTriple{static_cast<std::int64_t>(n), x, PadicNumber::zero(p),
                                              x + PadicNumber::power_of_p(p, static_cast<std::int64_t>(next))};
                        };
                      }});
  const PadicFunction g = e.function;
  Norm scale = Norm::one(p);
  for (const auto& c : span.coefficients) {
    if (c.is_nonzero()) scale = std::max(scale, c.abs_value());
  }
  e.claims.push_back(Claim{
      "contraction", "|g(x) - g(y)| <= C |x - y|^2 and |Phi_1 g(x, y)| <= C |x - y| on random pairs, C = max |c_i| (1 for a single set)",
      [g, p, scale](const ClaimContext& ctx) {
        std::mt19937_64 rng(ctx.seed);
        const std::int64_t samples = pick(ctx.samples, 10000);
        std::int64_t good = 0;
        nlohmann::json worst = nlohmann::json::array();
        for (std::int64_t i = 0; i < samples; ++i) {
          auto x = detail::random_point(rng, p, -4, 10, 16);
          auto y = x + detail::random_point(rng, p, -4, 20, 16);
          if (agrees(x, y)) continue;
          auto dist = (x - y).abs_value();
          bool ok = (g(x) - g(y)).norm_bound() <= scale * dist.pow(2) &&
                    phi_r(g, {x, y}).norm_bound() <= scale * dist;
          good += ok;
          if (!ok && worst.size() < 5) worst.push_back({to_string(x), to_string(y)});
        }
        ClaimOutcome out;
        out.passed = good == samples;
        out.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(samples),
                                         "pairs within the quadratic bound");
        out.details = {{"bound_scale", scale.to_string()}, {"violations", worst}};
        return out;
      }});
  const auto triples = std::get<TripleWitness>(e.witnesses.at("second-order-triples"));
  e.claims.push_back(Claim{
      "second-order", "|Phi_2 g(p^n, 0, p^n + p^n+)| equals the leading coefficient's norm, while g'' = 0",
      [g, triples, cell, beta](const ClaimContext& ctx) {
        auto ns = cell_indices(cell, pick(ctx.max_index, 40));
        auto trace = probe_strict_order2(g, triples.make(), static_cast<std::int64_t>(ns.size()));
        std::size_t good = 0;
        for (const auto& r : trace.rows) good += r.norm_exact && r.norm == beta.abs_value();
        ClaimOutcome out;
        out.passed = !ns.empty() && good == ns.size();
        out.summary = detail::pass_count(good, ns.size(), "second differences of norm " + beta.abs_value().to_string());
        out.details = {{"trace", to_json(trace)}};
        return out;
      }});
  e.claims.push_back(Claim{"independence", "g(p^n) = c p^2n on the witness cell",
                           [g, cell, beta, p](const ClaimContext& ctx) {
                             auto ns = cell_indices(cell, pick(ctx.max_index, 40));
                             std::size_t good = 0;
                             for (auto n : ns) {
                               good += exactly_equal(g(PadicNumber::power_of_p(p, n)),
                                                     beta * PadicNumber::power_of_p(p, 2 * n));
                             }
                             ClaimOutcome out;
                             out.passed = !ns.empty() && good == ns.size();
                             out.summary = detail::pass_count(good, ns.size(), "witness values equal to c p^2n");
                             return out;
                           }});
  e.claims.push_back(derivative_consistency_claim(e, 1, 30));
  return e;
}

}  // namespace padic::zoo
