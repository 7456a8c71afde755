#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "padic/families.hpp"
#include "padic/function.hpp"
#include "padic/quotients.hpp"

namespace padic::zoo {

struct ClaimContext {
  std::uint64_t seed = 1;
  /// Number of random samples; 0 selects the claim's default.
  std::int64_t samples = 0;
  /// Largest witness index; 0 selects the claim's default.
  std::int64_t max_index = 0;
};

struct ClaimOutcome {
  bool passed = false;
  std::string summary;
  nlohmann::json details = nlohmann::json::object();
};

struct Claim {
  std::string name;
  std::string description;
  std::function<ClaimOutcome(const ClaimContext&)> run;
};

struct PointWitness {
  PadicNumber base;
  std::function<PointSequence()> make;
};
struct PairWitness {
  std::function<PairSequence()> make;
};
struct TripleWitness {
  std::function<TripleSequence()> make;
};
using Witness = std::variant<PointWitness, PairWitness, TripleWitness>;

struct ZooEntry {
  std::string name;
  PadicFunction function;
  std::optional<PadicFunction> derivative;
  std::map<std::string, Witness> witnesses;
  std::vector<Claim> claims;
  /// Exponent beta for the (1+y)^beta families.
  std::optional<PadicNumber> exponent;
  /// Random points of the domain, used by generic claims.
  std::function<PadicNumber(std::mt19937_64&)> sample;

  /// Throws DomainError for an unknown name.
  const Claim& claim(const std::string& name) const;
};

/// A linear combination sum c_i f_{N_i} over the periodic family of size
/// coefficients.size(). The witness cell is the one containing N_lead and no
/// other set, lead being the first nonzero coefficient.
struct Span {
  Prime prime;
  std::vector<PadicNumber> coefficients;
  Ground ground = Ground::Naturals;

  /// coefficient e_bit: the single set N_bit of the family of size k.
  static Span single(Prime p, int k, int bit, Ground ground = Ground::Naturals);

  std::vector<IndexSet> family() const;
  std::size_t lead() const;
  const PadicNumber& lead_coefficient() const { return coefficients[lead()]; }
  CellEnumerator witness_cell() const;
  /// sum of c_i over the sets containing n.
  PadicNumber weight(std::uint64_t n) const;
  nlohmann::json to_json() const;
};

/// |Phi_1 f(x, x + h) - f'(x)| along h = p^j, j = first..last, at random
/// points. A run passes when the maximum over the later half of the j range
/// is at most the maximum over the earlier half, and strictly below it unless
/// the last deviation is 0.
Claim derivative_consistency_claim(const ZooEntry& entry, std::int64_t first_j, std::int64_t last_j);

}  // namespace padic::zoo
