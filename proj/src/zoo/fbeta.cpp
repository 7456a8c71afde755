#include <algorithm>
#include <map>

#include "common.hpp"
#include "padic/binomial.hpp"
#include "padic/zoo/functions.hpp"

namespace padic::zoo {

namespace {

bool is_exact_integer(const PadicNumber& x) {
  if (x.is_exact_zero()) return true;
  if (!x.is_exact() || x.is_bounded_zero()) return false;
  mpq_class q = x.exact_value();
  return q.get_den() == 1 && q.get_num().fits_slong_p();
}

// (1+y)^beta: exact when both are exact and beta is a machine integer.
PadicNumber power_unit(const PadicNumber& y, const PadicNumber& beta, std::int64_t precision) {
  if (y.is_exact() && is_exact_integer(beta)) {
    long k = beta.is_exact_zero() ? 0 : beta.exact_value().get_num().get_si();
    return (PadicNumber::one(y.prime()) + y).pow(k);
  }
  return pow_one_plus(y, beta, precision);
}

void check_exponent(const PadicNumber& beta) {
  if (beta.is_zero()) throw DomainError("exponent must be a nonzero element of Z_p");
  if (beta.valuation() < 0) throw DomainError("exponent must lie in Z_p");
}

// x = (digits at positions -n..0) + y with y in pZ_p; n = -ord_p x.
struct Split {
  std::int64_t n;
  PadicNumber y;
};

// Empty for x in pZ_p.
std::optional<Split> split(const PadicNumber& x) {
  if (x.is_exact_zero()) return std::nullopt;
  if (x.is_bounded_zero()) {
    if (x.abs_precision() >= 1) return std::nullopt;
    throw InsufficientPrecision("cannot tell whether x lies in pZ_p", 1);
  }
  if (x.valuation() >= 1) return std::nullopt;
  if (x.abs_precision() < 1) throw InsufficientPrecision("digit 0 of x is unknown", 1);
  return Split{-x.valuation(), x - x.head(1)};
}

// Smallest n0 >= 1 such that for n >= n0 the degree-k1 term of
// sum_q p^(-n k_q) T_q strictly dominates. c_q = ord_p T_q (a lower bound for
// a bounded zero); exact zeros are skipped.
std::int64_t domination_threshold(const std::vector<std::int64_t>& degrees, const std::vector<PadicNumber>& terms) {
  const std::int64_t c1 = terms[0].valuation();
  std::int64_t n0 = 1;
  for (std::size_t q = 1; q < terms.size(); ++q) {
    if (terms[q].is_exact_zero()) continue;
    const std::int64_t cq = terms[q].is_bounded_zero() ? terms[q].abs_precision() : terms[q].valuation();
    const std::int64_t num = c1 - cq;
    const std::int64_t den = degrees[0] - degrees[q];
    std::int64_t fl = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --fl;
    n0 = std::max(n0, fl + 1);
  }
  return n0;
}

std::string polynomial_text(const Polynomial& poly) {
  std::string s;
  for (const auto& m : poly) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(m.coefficient) + ")";
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      s += "*x" + std::to_string(i + 1);
      if (m.exponents[i] != 1) s += "^" + std::to_string(m.exponents[i]);
    }
  }
  return s;
}

}  // namespace

ZooEntry fbeta(const PadicNumber& beta, std::int64_t precision) {
  check_exponent(beta);
  const Prime p = beta.prime();
  auto eval = [beta, precision](const PadicNumber& x) -> PadicNumber {
    auto s = split(x);
    if (!s) return PadicNumber::zero(x.prime());
    return PadicNumber::power_of_p(x.prime(), -s->n) * power_unit(s->y, beta, precision);
  };
  auto deriv = [beta, precision](const PadicNumber& x) -> PadicNumber {
    auto s = split(x);
    if (!s) return PadicNumber::zero(x.prime());
    return PadicNumber::power_of_p(x.prime(), -s->n) * beta *
           power_unit(s->y, beta - PadicNumber::one(x.prime()), precision);
  };
  ZooEntry e{"fbeta",
             PadicFunction(p, Domain::Qp, eval, {}, "fbeta"),
             PadicFunction(p, Domain::Qp, deriv, {}, "fbeta'"),
             {},
             {},
             beta,
             [p](std::mt19937_64& rng) { return detail::random_point(rng, p, -3, 3); }};
  e.witnesses.emplace("derivative-growth", PointWitness{PadicNumber::zero(p), [p]() -> PointSequence {
                        auto n = std::make_shared<std::int64_t>(0);
                        return [p, n]() -> std::optional<SamplePoint> {
                          ++*n;
                          return SamplePoint{*n, PadicNumber::power_of_p(p, -*n)};
                        };
                      }});
  const PadicFunction df = *e.derivative;
  const PadicFunction f = e.function;
  const auto growth = std::get<PointWitness>(e.witnesses.at("derivative-growth"));
  e.claims.push_back(Claim{"unbounded-derivative", "|f'(p^-n)| = |beta| p^n along x_n = p^-n",
                           [df, growth, beta, p](const ClaimContext& ctx) {
                             const std::int64_t count = detail::pick(ctx.max_index, 40);
                             auto seq = growth.make();
                             std::int64_t good = 0;
                             nlohmann::json rows = nlohmann::json::array();
                             for (std::int64_t i = 0; i < count; ++i) {
                               auto pt = *seq();
                               PadicNumber d = df(pt.x);
                               bool ok = d.is_nonzero() && d.is_exact() &&
                                         d.abs_value() == beta.abs_value() * Norm::power(p, pt.index);
                               good += ok;
                               rows.push_back({{"n", pt.index}, {"derivative", to_string(d)},
                                               {"norm", d.is_nonzero() ? d.abs_value().to_string() : "0"}});
                             }
                             ClaimOutcome out;
                             out.passed = good == count;
                             out.summary = detail::pass_count(static_cast<std::size_t>(good),
                                                              static_cast<std::size_t>(count),
                                                              "derivative norms equal to |beta| p^n");
                             out.details = {{"beta", to_string(beta)}, {"rows", rows}};
                             return out;
                           }});
  e.claims.push_back(Claim{"vanishes-on-pZp", "f = 0 on random points of pZ_p", [f, p](const ClaimContext& ctx) {
                             std::mt19937_64 rng(ctx.seed);
                             const std::int64_t samples = detail::pick(ctx.samples, 1000);
                             std::int64_t good = 0;
                             for (std::int64_t i = 0; i < samples; ++i) {
                               good += f(detail::random_point(rng, p, 1, 30)).is_exact_zero();
                             }
                             ClaimOutcome out;
                             out.passed = good == samples;
                             out.summary = detail::pass_count(static_cast<std::size_t>(good),
                                                              static_cast<std::size_t>(samples), "points map to 0");
                             return out;
                           }});
  e.claims.push_back(derivative_consistency_claim(e, 1, 30));
  return e;
}

void validate_polynomial(const Polynomial& poly, std::size_t vars) {
  if (poly.empty()) throw DomainError("polynomial has no terms");
  for (std::size_t r = 0; r < poly.size(); ++r) {
    const auto& m = poly[r];
    if (m.coefficient.is_zero()) throw DomainError("polynomial coefficients must be nonzero");
    if (m.exponents.size() != vars) {
      throw DomainError("monomial has " + std::to_string(m.exponents.size()) + " exponents, expected " +
                        std::to_string(vars));
    }
    std::int64_t degree = 0;
    for (auto k : m.exponents) {
      if (k < 0) throw DomainError("negative exponent");
      degree += k;
    }
    if (degree == 0) throw DomainError("polynomial must not have a free term");
    for (std::size_t s = 0; s < r; ++s) {
      if (poly[s].exponents == m.exponents) throw DomainError("repeated exponent tuple");
    }
  }
}

std::vector<PadicNumber> surrogate_basis(Prime p, int m) {
  if (m < 1) throw DomainError("surrogate basis needs at least one element");
  std::vector<PadicNumber> h;
  for (int i = 1; i <= m; ++i) h.push_back(PadicNumber::power_of_p(p, i));
  return h;
}

std::vector<PadicNumber> aggregate_exponents(const Polynomial& poly, const std::vector<PadicNumber>& h) {
  validate_polynomial(poly, h.size());
  const Prime p = h.front().prime();
  std::vector<PadicNumber> betas;
  for (const auto& m : poly) {
    PadicNumber b(p);
    for (std::size_t i = 0; i < h.size(); ++i) b += PadicNumber::exact(p, m.exponents[i]) * h[i];
    if (!b.is_nonzero()) throw DomainError("aggregate exponent " + to_string(b) + " is not provably nonzero");
    for (std::size_t s = 0; s < betas.size(); ++s) {
      if (!(betas[s] - b).is_nonzero()) {
        throw DomainError("aggregate exponents of terms " + std::to_string(s + 1) + " and " +
                          std::to_string(betas.size() + 1) + " coincide (" + to_string(b) +
                          "); choose other basis elements");
      }
    }
    betas.push_back(b);
  }
  return betas;
}

GroupedDerivative group_by_degree(const Polynomial& poly, const std::vector<PadicNumber>& betas) {
  std::map<std::int64_t, GroupedDerivative::Group, std::greater<>> by_degree;
  for (std::size_t r = 0; r < poly.size(); ++r) {
    std::int64_t degree = 0;
    for (auto k : poly[r].exponents) degree += k;
    auto& g = by_degree[degree];
    g.degree = degree;
    g.alphas.push_back(poly[r].coefficient);
    g.betas.push_back(betas[r]);
  }
  GroupedDerivative gd;
  for (auto& [d, g] : by_degree) gd.groups.push_back(std::move(g));
  return gd;
}

PadicNumber group_sum(const GroupedDerivative::Group& g, const PadicNumber& y, std::int64_t precision) {
  PadicNumber s(y.prime());
  const PadicNumber one = PadicNumber::one(y.prime());
  for (std::size_t i = 0; i < g.alphas.size(); ++i) {
    s += g.alphas[i] * g.betas[i] * power_unit(y, g.betas[i] - one, precision);
  }
  return s;
}

PadicNumber grouped_derivative(const GroupedDerivative& gd, std::int64_t n, const PadicNumber& y,
                               std::int64_t precision) {
  PadicNumber s(y.prime());
  for (const auto& g : gd.groups) {
    s += PadicNumber::power_of_p(y.prime(), -n * g.degree) * group_sum(g, y, precision);
  }
  return s;
}

std::optional<PadicNumber> check_nonconstant_combination(const std::vector<PadicNumber>& gammas,
                                                         const std::vector<PadicNumber>& alphas,
                                                         int search_depth, std::int64_t precision) {
  if (gammas.empty() || gammas.size() != alphas.size()) {
    throw DomainError("gammas and alphas must be nonempty lists of equal length");
  }
  if (search_depth < 1) throw DomainError("search depth must be at least 1");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (gammas[i].is_zero()) throw DomainError("gammas must be nonzero");
    check_exponent(alphas[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (!(alphas[i] - alphas[j]).is_nonzero()) throw DomainError("alphas must be pairwise distinct");
    }
  }
  const Prime p = gammas.front().prime();
  auto value = [&](const PadicNumber& y) {
    PadicNumber s(p);
    for (std::size_t i = 0; i < gammas.size(); ++i) s += gammas[i] * power_unit(y, alphas[i], precision);
    return s;
  };
  PadicNumber base(p);
  for (const auto& g : gammas) base += g;
  const std::int64_t pv = p.value();
  // Every y = d_1 p + ... + d_t p^t with d_t != 0, t = 1..depth.
  for (int t = 1; t <= search_depth; ++t) {
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(t), 0);
    ds.back() = 1;
    for (;;) {
      PadicNumber y = PadicNumber::from_digits(p, 1, ds, PadicNumber::kExact);
      if ((value(y) - base).is_nonzero()) return y;
      std::size_t i = 0;
      while (i < ds.size()) {
        ++ds[i];
        const std::uint32_t lo = i + 1 == ds.size() ? 1 : 0;
        if (ds[i] < static_cast<std::uint32_t>(pv)) break;
        ds[i] = lo;
        ++i;
      }
      if (i == ds.size()) break;
    }
  }
  return std::nullopt;
}

GrowthWitness find_growth_witness(const GroupedDerivative& gd, Prime p, std::int64_t precision, int search_depth) {
  const auto& top = gd.groups.front();
  PadicNumber y1 = PadicNumber::zero(p);
  PadicNumber lead = group_sum(top, y1, precision);
  if (!lead.is_nonzero()) {
    std::vector<PadicNumber> gammas;
    std::vector<PadicNumber> alphas;
    const PadicNumber one = PadicNumber::one(p);
    for (std::size_t i = 0; i < top.alphas.size(); ++i) {
      gammas.push_back(top.alphas[i] * top.betas[i]);
      alphas.push_back(top.betas[i] - one);
    }
    auto found = check_nonconstant_combination(gammas, alphas, search_depth, precision);
    if (!found) throw InsufficientPrecision("no y_1 with S_1(y_1) != 0 up to the search depth");
    y1 = *found;
    lead = group_sum(top, y1, precision);
    if (!lead.is_nonzero()) throw InsufficientPrecision("S_1(y_1) is not provably nonzero");
  }
  std::vector<std::int64_t> degrees;
  std::vector<PadicNumber> terms;
  for (const auto& g : gd.groups) {
    degrees.push_back(g.degree);
    terms.push_back(group_sum(g, y1, precision));
  }
  return GrowthWitness{y1, lead, top.degree, domination_threshold(degrees, terms)};
}

ZooEntry poly_combine(const std::vector<ZooEntry>& entries, const Polynomial& poly, std::int64_t precision) {
  if (entries.empty()) throw DomainError("poly_combine needs at least one entry");
  validate_polynomial(poly, entries.size());
  const Prime p = entries.front().function.prime();
  for (const auto& e : entries) {
    if (e.function.prime() != p) throw PrimeMismatch("poly_combine: entries over different primes");
  }
  if (entries.size() == 1 && poly.size() == 1 && poly[0].exponents[0] == 1 &&
      exactly_equal(poly[0].coefficient, PadicNumber::one(p))) {
    return entries.front();
  }
  std::vector<PadicFunction> fs;
  Domain domain = Domain::Qp;
  bool has_derivatives = true;
  bool closed_form = true;
  for (const auto& e : entries) {
    fs.push_back(e.function);
    if (e.function.domain() == Domain::Zp) domain = Domain::Zp;
    has_derivatives = has_derivatives && e.derivative.has_value();
    closed_form = closed_form && e.exponent.has_value() && e.name == "fbeta";
  }
  auto eval = [fs, poly](const PadicNumber& x) {
    std::vector<PadicNumber> vs;
    for (const auto& f : fs) vs.push_back(f(x));
    PadicNumber s(x.prime());
    for (const auto& m : poly) {
      PadicNumber t = m.coefficient;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (m.exponents[i] > 0) t *= vs[i].pow(m.exponents[i]);
      }
      s += t;
    }
    return s;
  };
  ZooEntry out{"poly", PadicFunction(p, domain, eval, {}, "poly"), std::nullopt, {}, {}, std::nullopt,
               entries.front().sample};
  if (has_derivatives) {
    std::vector<PadicFunction> dfs;
    for (const auto& e : entries) dfs.push_back(*e.derivative);
    // Product rule: d(c prod f_i^k_i) = c sum_i k_i f_i^(k_i - 1) f_i' prod_{j != i} f_j^k_j.
    auto deriv = [fs, dfs, poly](const PadicNumber& x) {
      std::vector<PadicNumber> vs;
      std::vector<PadicNumber> ds;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        vs.push_back(fs[i](x));
        ds.push_back(dfs[i](x));
      }
      PadicNumber s(x.prime());
      for (const auto& m : poly) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
          if (m.exponents[i] == 0) continue;
          PadicNumber t = m.coefficient * PadicNumber::exact(x.prime(), m.exponents[i]) * ds[i];
          if (m.exponents[i] > 1) t *= vs[i].pow(m.exponents[i] - 1);
          for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j != i && m.exponents[j] > 0) t *= vs[j].pow(m.exponents[j]);
          }
          s += t;
        }
      }
      return s;
    };
    out.derivative = PadicFunction(p, domain, deriv, {}, "poly'");
    out.claims.push_back(derivative_consistency_claim(out, 1, 30));
  }
  if (!closed_form || !has_derivatives) return out;

  std::vector<PadicNumber> h;
  for (const auto& e : entries) h.push_back(*e.exponent);
  const auto betas = aggregate_exponents(poly, h);
  const GroupedDerivative gd = group_by_degree(poly, betas);
  const PadicFunction df = *out.derivative;
  const PadicFunction f = out.function;
  const std::string text = polynomial_text(poly);

  out.claims.push_back(Claim{
      "grouped-derivative", "the product-rule derivative matches the degree-grouped closed form at random points",
      [df, gd, p, precision](const ClaimContext& ctx) {
        std::mt19937_64 rng(ctx.seed);
        const std::int64_t samples = detail::pick(ctx.samples, 200);
        std::int64_t good = 0;
        for (std::int64_t i = 0; i < samples; ++i) {
          PadicNumber x = detail::random_point(rng, p, -4, 0);
          auto s = split(x);
          good += agrees(df(x), grouped_derivative(gd, s->n, s->y, precision));
        }
        ClaimOutcome r;
        r.passed = good == samples;
        r.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(samples),
                                       "points agree");
        return r;
      }});
  out.claims.push_back(Claim{
      "derivative-growth", "|P'(p^-n + y_1)| = p^(n k_1) |S_1(y_1)| for n0 <= n <= last",
      [df, gd, p, precision, text](const ClaimContext& ctx) {
        ClaimOutcome r;
        GrowthWitness w = find_growth_witness(gd, p, precision);
        const std::int64_t last = detail::pick(ctx.max_index, 20);
        const Norm c = w.leading_sum.abs_value();
        std::int64_t checked = 0;
        std::int64_t good = 0;
        nlohmann::json rows = nlohmann::json::array();
        for (std::int64_t n = w.n0; n <= last; ++n) {
          PadicNumber d = df(PadicNumber::power_of_p(p, -n) + w.y1);
          const Norm expected = Norm::power(p, n * w.top_degree) * c;
          bool ok = d.is_nonzero() && d.abs_value() == expected;
          ++checked;
          good += ok;
          rows.push_back({{"n", n}, {"norm", d.is_nonzero() ? d.abs_value().to_string() : "0"},
                          {"expected", expected.to_string()}});
        }
        r.passed = checked > 0 && good == checked;
        r.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(checked),
                                       "norms equal to p^(" + std::to_string(w.top_degree) + "n) * " +
                                           c.to_string()) +
                    " (n0 = " + std::to_string(w.n0) + ")";
        r.details = {{"polynomial", text}, {"y1", to_string(w.y1)}, {"C", c.to_string()},
                     {"n0", w.n0},         {"top_degree", w.top_degree}, {"rows", rows}};
        return r;
      }});
  out.claims.push_back(Claim{
      "nonvanishing", "P(f_h1, ..., f_hm) is nonzero at p^-n + y for a searched y and all n0 <= n <= last",
      [f, gd, p, precision](const ClaimContext& ctx) {
        // Same dominance argument as for the derivative, applied to the values
        // sum_q p^(-n k_q) sum_s alpha_{q,s} (1+y)^beta_{q,s}.
        auto values_at = [&](const PadicNumber& y) {
          std::vector<PadicNumber> terms;
          for (const auto& g : gd.groups) {
            PadicNumber s(p);
            for (std::size_t i = 0; i < g.alphas.size(); ++i) s += g.alphas[i] * power_unit(y, g.betas[i], precision);
            terms.push_back(s);
          }
          return terms;
        };
        ClaimOutcome r;
        PadicNumber y = PadicNumber::zero(p);
        auto terms = values_at(y);
        if (!terms[0].is_nonzero()) {
          const auto& top = gd.groups.front();
          auto found = check_nonconstant_combination(top.alphas, top.betas, 2, precision);
          if (!found) {
            r.summary = "no witness found up to depth 2 (inconclusive)";
            return r;
          }
          y = *found;
          terms = values_at(y);
        }
        std::vector<std::int64_t> degrees;
        for (const auto& g : gd.groups) degrees.push_back(g.degree);
        const std::int64_t n0 = domination_threshold(degrees, terms);
        const std::int64_t last = std::max(n0, detail::pick(ctx.max_index, 20));
        std::int64_t good = 0;
        for (std::int64_t n = n0; n <= last; ++n) good += f(PadicNumber::power_of_p(p, -n) + y).is_nonzero();
        r.passed = good == last - n0 + 1;
        r.summary = detail::pass_count(static_cast<std::size_t>(good), static_cast<std::size_t>(last - n0 + 1),
                                       "nonzero values") + " at y = " + to_string(y);
        return r;
      }});
  return out;
}

}  // namespace padic::zoo
