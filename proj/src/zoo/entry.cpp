#include "padic/zoo/entry.hpp"

#include <algorithm>

#include "padic/errors.hpp"
#include "padic/text.hpp"

namespace padic::zoo {

const Claim& ZooEntry::claim(const std::string& wanted) const {
  for (const auto& c : claims) {
    if (c.name == wanted) return c;
  }
  std::string known;
  for (const auto& c : claims) known += (known.empty() ? "" : ", ") + c.name;
  throw DomainError("entry " + name + " has no claim '" + wanted + "' (claims: " + known + ")");
}

Span Span::single(Prime p, int k, int bit, Ground ground) {
  IndexSet check(k, bit, ground);
  std::vector<PadicNumber> cs(static_cast<std::size_t>(k), PadicNumber::zero(p));
  cs[static_cast<std::size_t>(check.member_bit())] = PadicNumber::one(p);
  return Span{p, cs, ground};
}

std::vector<IndexSet> Span::family() const {
  return generate_family(static_cast<int>(coefficients.size()), ground);
}

std::size_t Span::lead() const {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i].is_zero()) return i;
  }
  throw DomainError("linear combination with all coefficients zero");
}

CellEnumerator Span::witness_cell() const {
  return CellEnumerator(static_cast<int>(coefficients.size()), std::uint64_t{1} << lead(), ground);
}

PadicNumber Span::weight(std::uint64_t n) const {
  PadicNumber w(prime);
  auto fam = family();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (fam[i].contains(n)) w += coefficients[i];
  }
  return w;
}

nlohmann::json Span::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coefficients) cs.push_back(to_string(c));
  return {{"family_size", coefficients.size()},
          {"coefficients", cs},
          {"ground", ground == Ground::Naturals ? "N" : "N0"}};
}

Claim derivative_consistency_claim(const ZooEntry& entry, std::int64_t first_j, std::int64_t last_j) {
  PadicFunction f = entry.function;
  PadicFunction df = *entry.derivative;
  auto sample = entry.sample;
  auto run = [f, df, sample, first_j, last_j](const ClaimContext& ctx) {
    const std::int64_t points = ctx.samples > 0 ? ctx.samples : 100;
    std::mt19937_64 rng(ctx.seed);
    const Prime p = f.prime();
    ClaimOutcome out;
    out.passed = true;
    nlohmann::json failures = nlohmann::json::array();
    for (std::int64_t i = 0; i < points; ++i) {
      PadicNumber x = sample(rng);
      PadicNumber d = df(x);
      std::vector<Norm> devs;
      for (std::int64_t j = first_j; j <= last_j; ++j) {
        PadicNumber h = PadicNumber::power_of_p(p, j);
        devs.push_back((phi_r(f, {x, x + h}) - d).norm_bound());
      }
      const std::size_t half = devs.size() / 2;
      Norm early = Norm::zero(p);
      Norm late = Norm::zero(p);
      for (std::size_t k = 0; k < devs.size(); ++k) {
        Norm& side = k < half ? early : late;
        side = std::max(side, devs[k]);
      }
      bool ok = late <= early && (devs.back().is_zero() || late < early);
      if (!ok) {
        out.passed = false;
        nlohmann::json row = {{"x", to_string(x)}, {"deviations", nlohmann::json::array()}};
        for (const auto& n : devs) row["deviations"].push_back(n.to_string());
        failures.push_back(row);
      }
    }
    out.summary = std::to_string(points - static_cast<std::int64_t>(failures.size())) + "/" +
                  std::to_string(points) + " points with decaying |Phi_1 f(x, x+h) - f'(x)|";
    out.details = {{"points", points}, {"steps", {first_j, last_j}}, {"failures", failures}};
    return out;
  };
  return Claim{"derivative-consistency", "difference quotients approach the stated derivative", run};
}

}  // namespace padic::zoo
