// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "padic/binomial.hpp"
#include "padic/errors.hpp"
#include "padic/families.hpp"
#include "padic/haar.hpp"
#include "padic/quotients.hpp"
#include "padic/text.hpp"
#include "padic/vanderput.hpp"
#include "padic/zoo/balls.hpp"
#include "padic/zoo/functions.hpp"
#include "support/random_padic.hpp"

using namespace padic;
using namespace padic::zoo;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Collects failures, keeps the first few messages.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.passed = failed_ == 0 && total_ > 0;
    o.detail = summary + ", " + std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks";
    if (!first_.empty()) o.detail += " [" + first_ + "]";
    return o;
  }

 private:
  long total_ = 0;
  long failed_ = 0;
  std::string first_;
};

PadicNumber pp(Prime p, std::int64_t k) { return PadicNumber::power_of_p(p, k); }

// Exact value with the known digits of x.
PadicNumber known_digits(const PadicNumber& x) { return x.is_exact() ? x : x.head(x.abs_precision()); }

// Nonzero exact rational or capped value with random valuation.
PadicNumber random_value(std::mt19937_64& rng, Prime p) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::int64_t> val(-6, 12);
  std::uniform_int_distribution<std::int64_t> len(1, 20);
  for (;;) {
    PadicNumber x = kind(rng) == 0 ? testing::random_exact(rng, p, 1000) * pp(p, val(rng))
                                   : testing::random_capped(rng, p, val(rng), len(rng));
    if (x.is_nonzero()) return x;
  }
}

// Members of the cell of set `lead` in a family of size k, n <= limit, by direct membership.
std::vector<std::int64_t> cell_members(int k, std::size_t lead, std::int64_t limit) {
  auto fam = generate_family(k);
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= limit; ++n) {
    bool ok = true;
    for (std::size_t i = 0; i < fam.size(); ++i) ok = ok && fam[i].contains(n) == (i == lead);
    if (ok) out.push_back(n);
  }
  return out;
}

std::vector<PadicNumber> random_coefficients(std::mt19937_64& rng, Prime p, int k) {
  for (;;) {
    std::vector<PadicNumber> cs;
    bool any = false;
    for (int i = 0; i < k; ++i) {
      cs.push_back(testing::random_exact(rng, p, 30));
      any = any || cs.back().is_nonzero();
    }
    if (any) return cs;
  }
}

std::size_t lead_index(const std::vector<PadicNumber>& cs) {
  std::size_t i = 0;
  while (cs[i].is_zero()) ++i;
  return i;
}

Outcome ultrametric() {
  Tally t;
  for (std::int64_t q : {2, 3, 5}) {
    Prime p(q);
    std::mt19937_64 rng(100 + q);
    for (int i = 0; i < 10000; ++i) {
      PadicNumber x = random_value(rng, p);
      PadicNumber y = random_value(rng, p);
      if (i % 4 == 0) y = x * testing::random_exact(rng, p, 5);  // equal norms more often
      if (!y.is_nonzero()) continue;
      const Norm nx = x.abs_value();
      const Norm ny = y.abs_value();
      t.check((x * y).abs_value() == nx * ny, "|xy| at " + to_string(x) + ", " + to_string(y));
      PadicNumber s = x + y;
      const Norm m = std::max(nx, ny);
      if (nx != ny) {
        t.check(s.is_nonzero() && s.abs_value() == m, "|x+y| = max at " + to_string(x) + ", " + to_string(y));
      } else {
        t.check(s.norm_bound() <= m, "|x+y| <= max at " + to_string(x) + ", " + to_string(y));
      }
    }
  }
  return t.outcome("p in {2,3,5}, 10^4 pairs each");
}

Outcome bumps_witnesses() {
  Tally t;
  Prime p(5);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto cs = random_coefficients(rng, p, 3);
    const std::size_t lead = lead_index(cs);
    const PadicNumber alpha = cs[lead];
    ZooEntry e = bump_fN(Span{p, cs, Ground::Naturals});
    auto ns = cell_members(3, lead, 40);
    t.check(!ns.empty(), "empty witness cell");
    auto idx = std::make_shared<std::size_t>(0);
    auto pts = [ns, idx, p]() -> std::optional<SamplePoint> {
      if (*idx >= ns.size()) return std::nullopt;
      auto n = ns[(*idx)++];
      return SamplePoint{n, pp(p, n)};
    };
    auto dtrace = probe_derivative(e.function, PadicNumber::zero(p), pts, static_cast<std::int64_t>(ns.size()));
    t.check(dtrace.rows.size() == ns.size(), "derivative probe length");
    for (const auto& r : dtrace.rows) {
      t.check(r.norm_exact && r.norm == alpha.abs_value() * Norm::power(5, -r.index),
              "derivative norm at n = " + std::to_string(r.index));
    }
    auto jdx = std::make_shared<std::size_t>(0);
    auto pairs = [ns, jdx, p]() -> std::optional<SamplePair> {
      if (*jdx >= ns.size()) return std::nullopt;
      auto n = ns[(*jdx)++];
      return SamplePair{n, pp(p, n), pp(p, n) - pp(p, 2 * n)};
    };
    auto strace = probe_strict(e.function, pairs, static_cast<std::int64_t>(ns.size()));
    t.check(strace.rows.size() == ns.size(), "strict probe length");
    for (const auto& r : strace.rows) {
      t.check(exactly_equal(r.quotient, alpha), "strict quotient at n = " + std::to_string(r.index));
    }
  }
  return t.outcome("p = 5, k = 3, 100 coefficient vectors, norms |alpha_1| p^-n");
}

Outcome spread_witnesses() {
  Tally t;
  for (std::int64_t q : {2, 3, 5}) {
    Prime p(q);
    std::mt19937_64 rng(30 + q);
    ZooEntry g = spread_gN(Span::single(p, 1, 0));
    std::uniform_int_distribution<std::int64_t> v(-4, 12);
    for (int i = 0; i < 10000; ++i) {
      PadicNumber x = random_value(rng, p);
      if (!x.is_exact()) x = testing::random_exact(rng, p, 1000) * pp(p, v(rng));
      PadicNumber y = x + known_digits(testing::random_capped(rng, p, v(rng) + 4, 12));
      if (!(x - y).is_nonzero()) continue;
      t.check(phi_r(g.function, {x, y}).norm_bound() <= (x - y).abs_value(),
              "|Phi_1 g| <= |x - y| at " + to_string(x) + ", " + to_string(y));
    }
    for (int trial = 0; trial < 20; ++trial) {
      auto cs = random_coefficients(rng, p, 3);
      const std::size_t lead = lead_index(cs);
      ZooEntry e = spread_gN(Span{p, cs, Ground::Naturals});
      auto ns = cell_members(3, lead, 48);
      for (std::size_t i = 0; i + 1 < ns.size() && ns[i] <= 40; ++i) {
        const std::int64_t n = ns[i];
        const std::int64_t next = ns[i + 1];
        PadicNumber v2 = phi_r(e.function, {pp(p, n), PadicNumber::zero(p), pp(p, n) + pp(p, next)});
        t.check(v2.is_nonzero() && v2.abs_value() == cs[lead].abs_value(),
                "second-order norm at n = " + std::to_string(n));
      }
    }
  }
  return t.outcome("p in {2,3,5}: 10^4 pairs and 20 combinations each");
}

Outcome lip_table() {
  Tally t;
  Prime p(2);
  ZooEntry e = lip_fN(Span::single(p, 1, 0, Ground::NaturalsWithZero));
  const std::uint64_t count = 10001;
  auto series = decompose(e.function, count, [p](std::uint64_t k) { return sigma(k, p); });
  double log_sup = -INFINITY;
  for (std::uint64_t n = 1; n < count; ++n) {
    const mpz_class s = sigma(n, 2);
    const Norm a = series.norm(s);
    if (a.is_zero()) continue;
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, s.get_mpz_t());
    const double log_s = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    const double log_a = a.log();
    if (n >= 2) {
      t.check(log_a + log_s <= std::log(2.0) - std::log(std::log(static_cast<double>(n))),
              "|a| sigma(n) <= p / ln n at n = " + std::to_string(n));
    }
    log_sup = std::max(log_sup, log_a + 2 * log_s);
  }
  t.check(log_sup > std::log(100.0), "running sup of |a| sigma(n)^2 stays below 10^2");
  return t.outcome("p = 2, N = odd numbers, n <= 10^4, sup |a| sigma(n)^2 = " + format_log_real(log_sup));
}

Outcome binomial() {
  Tally t;
  for (std::int64_t q : {2, 3, 5}) {
    Prime p(q);
    std::mt19937_64 rng(50 + q);
    std::uniform_int_distribution<std::int64_t> j(2, 20);
    for (int i = 0; i < 1000; ++i) {
      PadicNumber x = testing::random_capped(rng, p, 1 + static_cast<std::int64_t>(rng() % 4), 40);
      PadicNumber alpha = i % 2 ? testing::random_integral(rng, p, 60) : testing::random_exact(rng, p, 200);
      if (alpha.is_nonzero() && alpha.valuation() < 0) alpha = alpha * pp(p, -alpha.valuation());
      PadicNumber prod = pow_one_plus(x, alpha, 64) * pow_one_plus(x, -alpha, 64);
      t.check(prod.abs_precision() >= 30 && agrees(prod.with_precision(30), PadicNumber::one(p)),
              "(1+x)^a (1+x)^-a at " + to_string(x));
      // Exact base point so the quotient keeps enough digits.
      PadicNumber xe = x.head(40);
      PadicNumber deriv = alpha * pow_one_plus(xe, alpha - PadicNumber::one(p), 120);
      for (int s = 0; s < 3; ++s) {
        PadicNumber h = known_digits(testing::random_capped(rng, p, j(rng), 10));
        PadicNumber quotient = (pow_one_plus(xe + h, alpha, 120) - pow_one_plus(xe, alpha, 120)) / h;
        t.check((quotient - deriv).norm_bound() <= h.abs_value(), "finite difference at h = " + to_string(h));
      }
    }
  }
  return t.outcome("p in {2,3,5}, 10^3 draws each, |h| <= p^-2");
}

// Random polynomial in m variables with d monomials; with cancel set the
// top-degree group sums to zero at y = 0 when it has two terms.
std::optional<Polynomial> random_polynomial(std::mt19937_64& rng, Prime p, int m, int d, bool cancel) {
  std::uniform_int_distribution<std::int64_t> e(0, 3);
  Polynomial poly;
  std::set<std::vector<std::int64_t>> seen;
  int guard = 0;
  while (static_cast<int>(poly.size()) < d && ++guard < 100) {
    std::vector<std::int64_t> ex(static_cast<std::size_t>(m));
    std::int64_t deg = 0;
    for (auto& k : ex) deg += (k = e(rng));
    if (deg == 0 || !seen.insert(ex).second) continue;
    PadicNumber c = testing::random_exact(rng, p, 20);
    if (c.is_zero()) continue;
    poly.push_back({c, ex});
  }
  if (static_cast<int>(poly.size()) < d) return std::nullopt;
  if (cancel && d >= 2) {
    // Give the first two monomials the same degree, then cancel S_1(0).
    std::int64_t deg0 = 0;
    for (auto k : poly[0].exponents) deg0 += k;
    std::vector<std::int64_t> ex(static_cast<std::size_t>(m), 0);
    ex[0] = deg0 - 1 + (m == 1 ? 1 : 0);
    if (m > 1) ex[1] = 1;
    if (ex == poly[0].exponents || deg0 < 1 || (m == 1)) return std::nullopt;
    for (std::size_t r = 2; r < poly.size(); ++r) {
      if (poly[r].exponents == ex) return std::nullopt;
    }
    poly[1].exponents = ex;
  }
  return poly;
}

PadicNumber aggregate(const Monomial& mono, const std::vector<PadicNumber>& h) {
  PadicNumber b(h.front().prime());
  for (std::size_t i = 0; i < h.size(); ++i) b += PadicNumber::exact(b.prime(), mono.exponents[i]) * h[i];
  return b;
}

Outcome polynomial_growth() {
  Tally t;
  long instances = 0;
  long rejected = 0;
  long searched = 0;
  for (std::int64_t q : {3, 5}) {
    Prime p(q);
    std::mt19937_64 rng(60 + q);
    for (int trial = 0; trial < 120; ++trial) {
      const int m = 1 + trial % 3;
      const int d = 1 + (trial / 3) % 3;
      const bool cancel = trial % 2 == 1;
      auto maybe = random_polynomial(rng, p, m, d, cancel);
      if (!maybe) continue;
      Polynomial poly = *maybe;
      const auto h = surrogate_basis(p, m);
      if (cancel && d >= 2) {
        // alpha_2 = -alpha_1 beta_1 / beta_2 zeroes the degree group at y = 0.
        poly[1].coefficient = -poly[0].coefficient * aggregate(poly[0], h) / aggregate(poly[1], h);
      }
      std::vector<PadicNumber> betas;
      try {
        betas = aggregate_exponents(poly, h);
      } catch (const DomainError&) {
        ++rejected;
        continue;
      }
      std::vector<ZooEntry> fs;
      for (const auto& hi : h) fs.push_back(fbeta(hi));
      ZooEntry e = poly_combine(fs, poly);
      const GroupedDerivative gd = group_by_degree(poly, betas);
      GrowthWitness w = find_growth_witness(gd, p, kWorkingPrecision, 2);
      ++instances;
      if (w.y1.is_nonzero()) ++searched;
      // C recomputed from the top group with exact powers.
      PadicNumber c(p);
      const auto& top = gd.groups.front();
      for (std::size_t s = 0; s < top.alphas.size(); ++s) {
        c += top.alphas[s] * top.betas[s] *
             (PadicNumber::one(p) + w.y1).pow((top.betas[s] - PadicNumber::one(p)).exact_value().get_num().get_si());
      }
      t.check(c.is_nonzero(), "C = 0 for " + std::to_string(trial));
      if (!c.is_nonzero()) continue;
      t.check(w.n0 <= 20, "n0 beyond 20");
      for (std::int64_t n = w.n0; n <= 20; ++n) {
        PadicNumber dv = (*e.derivative)(pp(p, -n) + w.y1);
        t.check(dv.is_nonzero() && dv.abs_value() == Norm::power(q, n * top.degree) * c.abs_value(),
                "derivative norm at n = " + std::to_string(n));
      }
    }
    for (const PadicNumber& beta : {PadicNumber::exact(p, 2), PadicNumber::exact(p, mpq_class(1, 7))}) {
      ZooEntry F = Fbeta(beta, PadicNumber::zero(p));
      for (std::int64_t n = 1; n <= 6; ++n) {
        PadicNumber x = pp(p, n * n) + pp(p, n * n + 1);
        PadicNumber quotient = phi_r(F.function, {x, PadicNumber::zero(p)});
        t.check(quotient.is_nonzero() && quotient.abs_value() == Norm::power(q, n * n - n),
                "F_beta quotient at n = " + std::to_string(n));
      }
    }
  }
  std::ostringstream s;
  s << "p in {3,5}: " << instances << " polynomials (" << searched << " needed the y_1 search, " << rejected
    << " rejected for colliding exponents), F_beta for n <= 6";
  return t.outcome(s.str());
}

Outcome spheres() {
  Tally t;
  for (std::int64_t q : {2, 3, 5}) {
    Prime p(q);
    ZooEntry g = sphere_g(PadicNumber::one(p), 1);
    for (std::int64_t alpha : {1, 2}) {
      for (std::int64_t n = 1; n <= 10; ++n) {
        PadicNumber x = pp(p, n * n);
        PadicNumber fx = g.function(x);
        t.check(fx.is_nonzero() && fx.abs_value() / x.abs_value().pow(alpha) == Norm::power(q, (-1 + alpha * n) * n),
                "ratio at n = " + std::to_string(n));
      }
    }
    std::mt19937_64 rng(70 + q);
    std::uniform_int_distribution<std::int64_t> gap(1, 30);
    for (int i = 0; i < 1000; ++i) {
      PadicNumber x = random_value(rng, p);
      if (!x.is_exact()) x = known_digits(x);
      t.check((*g.derivative)(x).is_exact_zero(), "derivative entry at " + to_string(x));
      PadicNumber h = pp(p, x.valuation() + gap(rng)) * testing::random_exact(rng, p, 5);
      if (!h.is_nonzero() || h.valuation() <= x.valuation()) continue;
      t.check(phi_r(g.function, {x, x + h}).is_exact_zero(), "locally constant at " + to_string(x));
    }
  }
  return t.outcome("p in {2,3,5}, n <= 10, alpha in {1,2}, 10^3 points each");
}

Outcome pair_truncation() {
  Tally t;
  for (std::int64_t q : {2, 3, 5}) {
    Prime p(q);
    ZooEntry f = pair_f(p);
    ZooEntry g = pair_g(p);
    std::mt19937_64 rng(80 + q);
    std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(q - 1));
    for (std::int64_t m = 1; m <= 10; ++m) {
      const Norm bound = Norm::power(q, -(2 * m + 1));
      for (int i = 0; i < 10000; ++i) {
        std::vector<std::uint32_t> ds(static_cast<std::size_t>(2 * m + 12));
        for (auto& d : ds) d = rng() % 3 == 0 ? 0 : digit(rng);
        PadicNumber x = PadicNumber::from_digits(p, 0, ds, PadicNumber::kExact);
        std::vector<std::uint32_t> es(8);
        for (auto& d : es) d = digit(rng);
        PadicNumber y = x + PadicNumber::from_digits(p, 2 * m + 2, es, PadicNumber::kExact);
        t.check((f.function(x) - f.function(y)).norm_bound() < bound, "modulus at m = " + std::to_string(m));
      }
    }
    const PadicNumber one = PadicNumber::one(p);
    for (int s = 0; s < 20; ++s) {
      std::vector<std::uint32_t> ds;
      const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 10);
      for (std::int64_t i = 0; i < 2 * k; i += 2) {
        std::uint32_t a = digit(rng), b = digit(rng);
        if (a == 0 && b == 0) a = 1;
        ds.push_back(a);
        ds.push_back(b);
      }
      PadicNumber x = PadicNumber::from_digits(p, 0, ds, PadicNumber::kExact) +
                      pp(p, 2 * k) / (one - PadicNumber::exact(p, q * q));
      t.check(E_prefix_member(x, 500), "sampled point not in E");
      for (std::int64_t n = 0; n <= 30; ++n) {
        PadicNumber xbar = x.head(2 * n + 2) + pp(p, 2 * n + 4);
        const Norm dev = (phi_r(f.function, {x, xbar}) - one).norm_bound();
        t.check(dev >= Norm::power(q, -2), "deviation below p^-2 at n = " + std::to_string(n));
      }
    }
    const PadicNumber ones = one / (one - PadicNumber::exact(p, q));
    for (std::int64_t n = 1; n <= 40; ++n) {
      PadicNumber x = pp(p, n) * ones;
      PadicNumber quotient = phi_r(g.function, {x, PadicNumber::zero(p)});
      t.check(quotient.is_nonzero() && quotient.abs_value() == Norm::one(q), "g quotient at n = " + std::to_string(n));
    }
  }
  return t.outcome("p in {2,3,5}: 10^4 pairs per m <= 10, 20 E points, n <= 40");
}

Outcome haar_checks() {
  Tally t;
  for (std::int64_t q : {2, 3}) {
    Prime p(q);
    auto y0 = haar::estimate_Y0(p, 100000, 7);
    t.check(y0.within(3), "Y_0 z = " + std::to_string(y0.z_score));
    auto series = haar::estimate_E_prefix_series(p, 10, 100000, 7);
    for (std::size_t k = 0; k < series.size(); ++k) {
      t.check(series[k].within(3), "E prefix k = " + std::to_string(k + 1) + " z = " + std::to_string(series[k].z_score));
    }
    auto again = haar::estimate_E_prefix_series(p, 10, 100000, 7);
    std::ostringstream a, b;
    haar::write_csv(a, series);
    haar::write_csv(b, again);
    t.check(a.str() == b.str() && y0.to_json().dump() == haar::estimate_Y0(p, 100000, 7).to_json().dump(),
            "reports differ between identical runs");
  }
  return t.outcome("p in {2,3}, 10^5 samples, seed 7");
}

Outcome families() {
  Tally t;
  for (Ground g : {Ground::Naturals, Ground::NaturalsWithZero}) {
    for (int k = 1; k <= 10; ++k) {
      auto fam = generate_family(k, g);
      const std::uint64_t period = std::uint64_t{1} << k;
      std::vector<bool> seen(period, false);
      const std::uint64_t start = g == Ground::Naturals ? 1 : 0;
      for (std::uint64_t m = start; m < start + period; ++m) {
        std::uint64_t sig = 0;
        for (int i = 0; i < k; ++i) {
          if (fam[static_cast<std::size_t>(i)].contains(m)) sig |= std::uint64_t{1} << i;
        }
        seen[sig] = true;
      }
      for (std::uint64_t r = 0; r < period; ++r) t.check(seen[r], "empty cell " + std::to_string(r));
    }
  }
  return t.outcome("k <= 10, both ground sets");
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "ultrametric fuzz", 5, ultrametric},
      {2, "bump functions: derivative 0, strict quotient alpha_1", 0, bumps_witnesses},
      {3, "digit spreading: contraction and second-order witness", 0, spread_witnesses},
      {4, "N^1 but not Lip_alpha: coefficient table", 30, lip_table},
      {5, "binomial powers and their derivative", 0, binomial},
      {6, "f_beta polynomials: derivative growth; F_beta quotients", 0, polynomial_growth},
      {7, "sphere functions: growth ratio, locally constant", 0, spheres},
      {8, "pair truncation: modulus, E deviation, g at 0", 0, pair_truncation},
      {9, "Haar Monte Carlo", 10, haar_checks},
      {10, "independent families: all cells nonempty", 1, families},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    const bool passed = o.passed && in_time;
    failures += !passed;
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", secs, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " | " << o.detail
              << " | " << timing << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
