#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padic/zoo/functions.hpp"

namespace padic::zoo {

/// Construction parameters shared by the registry entries. Index sets are
/// given as (family_size, bit) into the canonical periodic family; explicit
/// coefficients select a linear combination instead.
struct ZooParams {
  Prime prime{2};
  std::int64_t precision = kWorkingPrecision;
  int family_size = 1;
  int bit = 0;
  std::vector<PadicNumber> coefficients;
  std::optional<PadicNumber> beta;  // default 2
  std::optional<PadicNumber> a;     // default 0
  std::int64_t power = 1;
  /// For fbeta_poly; default x1^2 x2 + 3 x2 over f_p, f_(p^2).
  std::optional<Polynomial> polynomial;
};

struct RegistryItem {
  std::string name;
  std::string description;
};

const std::vector<RegistryItem>& registry();

/// Registry name for a name or one of its aliases (e.g. lip_fN -> lip).
std::string canonical_name(const std::string& name);

/// Throws DomainError for an unknown name.
ZooEntry make_entry(const std::string& name, const ZooParams& params);

/// "c:e1,e2,...;c:e1,..." with c parsed as a p-adic expression.
Polynomial parse_polynomial(const std::string& text, Prime p);

}  // namespace padic::zoo
