#pragma once

#include <cstdint>
#include <vector>

#include "padic/padic_number.hpp"

namespace padic::zoo {

/// The closed ball {x : ord_p(x - center) >= depth}, i.e. radius p^-depth.
struct Ball {
  PadicNumber center;
  std::int64_t depth;
};

/// Membership; throws InsufficientPrecision when x is too coarse to decide.
bool contains(const Ball& b, const PadicNumber& x);

/// Balls in an ultrametric space are disjoint iff neither center lies in the other ball.
bool disjoint(const Ball& a, const Ball& b);

struct BallSystem {
  std::vector<Ball> balls;

  /// Index of the pair violating disjointness among the first `bound` balls, or -1.
  std::int64_t first_overlap(std::size_t bound) const;
  /// Index of the ball containing x, or -1.
  std::int64_t locate(const PadicNumber& x) const;
};

/// B_n = p^n + p^(2n+1) Z_p, n = 1..count.
BallSystem bump_balls(Prime p, std::int64_t count);
/// B_n = p^n + p^(n+1) Z_p, n = 1..count.
BallSystem pair_balls(Prime p, std::int64_t count);
/// a + p^(n^2) + p^(n^2+1) Z_p, n = 1..count.
BallSystem gbeta_balls(const PadicNumber& a, std::int64_t count);
/// The spheres {ord_p x = n^2}, n = 1..count, each as its p-1 leading-digit balls.
BallSystem sphere_system(Prime p, std::int64_t count);
/// The van der Put balls of sigma(0), ..., sigma(count-1).
BallSystem vdp_balls(Prime p, std::int64_t count);

/// The increasing enumeration of M = {d p^j : 1 <= d < p, j >= 0}:
/// sigma(n) = ((n mod (p-1)) + 1) p^floor(n/(p-1)).
mpz_class sigma(std::uint64_t n, std::int64_t p);
/// Inverse on the van der Put ball of sigma(n): the x with ord_p x = j and
/// leading digit d lie in the ball of d p^j, index j(p-1) + d - 1.
std::uint64_t sigma_index(std::int64_t j, std::uint32_t d, std::int64_t p);

/// The greedy construction scanned literally over 1..limit: keep n when its
/// van der Put ball misses every ball kept so far. Slow; a test oracle.
std::vector<mpz_class> greedy_vdp_indices(std::int64_t p, std::uint64_t limit);

/// m_1 = 1 and m_k = max(1, floor(ln(k ln k) / ln p)) for k >= 2, evaluated in
/// 256-bit floating point. Nondecreasing in k.
std::int64_t m_schedule(const mpz_class& k, std::int64_t p);

}  // namespace padic::zoo
