#include <cmath>

#include "common.hpp"
#include "padic/binomial.hpp"
#include "padic/zoo/functions.hpp"

namespace padic::zoo {

using detail::ceil_sqrt;
using detail::square_root_index;

namespace {

PadicNumber unit_power(const PadicNumber& y, const PadicNumber& beta, std::int64_t precision) {
  if (y.is_exact() && beta.is_exact() && !beta.is_zero() && beta.exact_value().get_den() == 1 &&
      beta.exact_value().get_num().fits_slong_p()) {
    return (PadicNumber::one(y.prime()) + y).pow(beta.exact_value().get_num().get_si());
  }
  if (beta.is_exact_zero()) return PadicNumber::one(y.prime());
  return pow_one_plus(y, beta, precision);
}

// For z = x - a in a ball p^(n^2) + p^(n^2+1) Z_p: n and y = z / p^(n^2) - 1.
struct BallPosition {
  std::int64_t n;
  PadicNumber y;
};

std::optional<BallPosition> locate(const PadicNumber& z) {
  if (!z.is_nonzero()) return std::nullopt;
  const std::int64_t v = z.valuation();
  const std::int64_t n = square_root_index(v);
  if (n == 0 || z.digit(v) != 1) return std::nullopt;
  const Prime p = z.prime();
  return BallPosition{n, z * PadicNumber::power_of_p(p, -v) - PadicNumber::one(p)};
}

}  // namespace

ZooEntry gbeta(const PadicNumber& beta, const PadicNumber& a, std::int64_t precision) {
  if (beta.is_zero() || beta.valuation() < 0) throw DomainError("exponent must be a nonzero element of Z_p");
  const Prime p = beta.prime();
  if (a.prime() != p) throw PrimeMismatch("gbeta: centre and exponent primes differ");
  auto eval = [beta, a, precision](const PadicNumber& x) -> PadicNumber {
    const Prime q = x.prime();
    PadicNumber z = x - a;
    if (z.is_exact_zero()) return PadicNumber::zero(q);
    if (z.is_bounded_zero()) {
      // Every ball still reachable has n^2 >= N; all values lie in pZ_p anyway.
      return PadicNumber::bounded_zero(q, std::max<std::int64_t>(1, ceil_sqrt(z.abs_precision())));
    }
    auto pos = locate(z);
    if (!pos) return PadicNumber::zero(q);
    return PadicNumber::power_of_p(q, pos->n) * unit_power(pos->y, beta, precision);
  };
  auto deriv = [beta, a, precision](const PadicNumber& x) -> PadicNumber {
    const Prime q = x.prime();
    PadicNumber z = x - a;
    if (z.is_exact_zero()) throw DomainError("gbeta: g is not differentiable at a");
    if (z.is_bounded_zero()) throw InsufficientPrecision("gbeta: x too close to a", z.abs_precision() + 1);
    auto pos = locate(z);
    if (!pos) return PadicNumber::zero(q);
    return PadicNumber::power_of_p(q, pos->n - pos->n * pos->n) * beta *
           unit_power(pos->y, beta - PadicNumber::one(q), precision);
  };
  ZooEntry e{"gbeta",
             PadicFunction(p, Domain::Qp, eval, {}, "gbeta"),
             PadicFunction(p, Domain::Qp, deriv, {}, "gbeta'"),
             {},
             {},
             beta,
             {}};
  e.sample = [p, a](std::mt19937_64& rng) {
    // Half near a inside the balls n = 1..4, half generic.
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 0) return detail::random_point(rng, p, -3, 6);
    std::uniform_int_distribution<std::int64_t> n(1, 4);
    const std::int64_t k = n(rng);
    return a + PadicNumber::power_of_p(p, k * k) * (PadicNumber::one(p) + detail::random_point(rng, p, 1, 4));
  };
  e.witnesses.emplace("quotient-growth", PointWitness{a, [a, p]() -> PointSequence {
                        auto n = std::make_shared<std::int64_t>(0);
                        return [a, p, n]() -> std::optional<SamplePoint> {
                          ++*n;
                          const std::int64_t s = *n * *n;
                          return SamplePoint{*n, a + PadicNumber::power_of_p(p, s) + PadicNumber::power_of_p(p, s + 1)};
                        };
                      }});
  e.claims.push_back(derivative_consistency_claim(e, 17, 30));
  return e;
}

ZooEntry Fbeta(const PadicNumber& beta, const PadicNumber& a, std::int64_t precision) {
  ZooEntry f = fbeta(beta, precision);
  ZooEntry g = gbeta(beta, a, precision);
  const Prime p = beta.prime();
  const PadicFunction ff = f.function;
  const PadicFunction gf = g.function;
  const PadicFunction fd = *f.derivative;
  const PadicFunction gd = *g.derivative;
  ZooEntry e{"Fbeta",
             PadicFunction(p, Domain::Qp, [ff, gf](const PadicNumber& x) { return ff(x) + gf(x); }, {}, "Fbeta"),
             PadicFunction(p, Domain::Qp, [fd, gd](const PadicNumber& x) { return fd(x) + gd(x); }, {}, "Fbeta'"),
             g.witnesses,
             {},
             beta,
             g.sample};
  const PadicFunction F = e.function;
  const auto growth = std::get<PointWitness>(e.witnesses.at("quotient-growth"));
  e.claims.push_back(Claim{
      "quotient-growth", "|Phi_1 F(a + p^(n^2) + p^(n^2+1), a)| = p^(n^2 - n)",
      [F, growth, p](const ClaimContext& ctx) {
        const std::int64_t count = detail::pick(ctx.max_index, 6);
        auto trace = probe_derivative(F, growth.base, growth.make(), count);
        std::int64_t good = 0;
        for (const auto& r : trace.rows) {
          good += r.norm_exact && r.norm == Norm::power(p, r.index * r.index - r.index);
        }
        ClaimOutcome out;
        out.passed = good == count;
        out.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(count),
                                         "quotient norms equal to p^(n^2-n)");
        out.details = {{"trace", to_json(trace)}};
        return out;
      }});
  const bool a_integral_p = a.is_zero() || a.valuation() >= 1;
  const std::int64_t va = a.is_nonzero() ? a.valuation() : 0;
  e.claims.push_back(Claim{
      "continuity-at-a",
      "|F(x) - F(a)| <= max(p^-ceil(sqrt N), |f_beta(x) - f_beta(a)| bound) for x in a + p^N Z_p",
      [F, a, p, a_integral_p, va](const ClaimContext& ctx) {
        std::mt19937_64 rng(ctx.seed);
        const std::int64_t last = detail::pick(ctx.max_index, 40);
        const std::int64_t per = detail::pick(ctx.samples, 20);
        const PadicNumber fa = F(a);
        std::int64_t total = 0;
        std::int64_t good = 0;
        for (std::int64_t big_n = 1; big_n <= last; ++big_n) {
          Norm bound = Norm::power(p, -std::max<std::int64_t>(1, ceil_sqrt(big_n)));
          // f_beta is 0 on pZ_p; elsewhere it moves by at most p^-va |x - a|.
          if (!a_integral_p) bound = std::max(bound, Norm::power(p, -va - big_n));
          for (std::int64_t i = 0; i < per; ++i) {
            PadicNumber x = a + detail::random_point(rng, p, big_n, big_n + 3);
            ++total;
            good += (F(x) - fa).norm_bound() <= bound;
          }
        }
        ClaimOutcome out;
        out.passed = good == total;
        out.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(total),
                                         "points within the continuity modulus");
        return out;
      }});
  e.claims.push_back(derivative_consistency_claim(e, 17, 30));
  return e;
}

}  // namespace padic::zoo
