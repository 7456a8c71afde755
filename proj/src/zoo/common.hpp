#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "padic/errors.hpp"
#include "padic/text.hpp"
#include "padic/zoo/entry.hpp"

namespace padic::zoo::detail {

// Exact p^v * (random integer with `len` base-p digits, leading digit nonzero).
inline PadicNumber random_point(std::mt19937_64& rng, Prime p, std::int64_t v_lo, std::int64_t v_hi,
                                std::int64_t len = 12) {
  std::uniform_int_distribution<std::int64_t> val(v_lo, v_hi);
  std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(p.value() - 1));
  std::uniform_int_distribution<std::uint32_t> lead(1, static_cast<std::uint32_t>(p.value() - 1));
  std::vector<std::uint32_t> ds(static_cast<std::size_t>(len));
  ds[0] = lead(rng);
  for (std::size_t i = 1; i < ds.size(); ++i) ds[i] = digit(rng);
  return PadicNumber::from_digits(p, val(rng), ds, PadicNumber::kExact);
}

// Members of the cell up to max_index.
inline std::vector<std::int64_t> cell_indices(CellEnumerator cell, std::int64_t max_index) {
  std::vector<std::int64_t> out;
  for (auto n = cell.first(); static_cast<std::int64_t>(n) <= max_index; n = cell.next_after(n)) {
    out.push_back(static_cast<std::int64_t>(n));
  }
  return out;
}

// Smallest valuation among the nonzero coefficients; kExact when all vanish.
inline std::int64_t min_coefficient_valuation(const Span& s) {
  std::int64_t m = PadicNumber::kExact;
  for (const auto& c : s.coefficients) {
    if (c.is_nonzero()) m = std::min(m, c.valuation());
  }
  return m;
}

inline std::string pass_count(std::size_t good, std::size_t total, const std::string& what) {
  return std::to_string(good) + "/" + std::to_string(total) + " " + what;
}

inline std::int64_t pick(std::int64_t requested, std::int64_t fallback) {
  return requested > 0 ? requested : fallback;
}

// n with n^2 = v, or 0 when v is not a positive square.
inline std::int64_t square_root_index(std::int64_t v) {
  if (v < 1) return 0;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : 0;
}

inline std::int64_t ceil_sqrt(std::int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r < v) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= v) --r;
  return r;
}

}  // namespace padic::zoo::detail
