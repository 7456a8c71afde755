#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padic/zoo/entry.hpp"

namespace padic::zoo {

inline constexpr std::int64_t kWorkingPrecision = PadicNumber::kDefaultPrecision;

/// sum c_i f_{N_i} with f_N = p^(2n) on p^n + p^(2n+1) Z_p for n in N, else 0.
ZooEntry bump_fN(const Span& span, std::int64_t precision = kWorkingPrecision);

/// sum c_i g_{N_i} with g_N(sum a_n p^n) = sum_{n in N} a_n p^(2n); digits at
/// negative positions are dropped.
ZooEntry spread_gN(const Span& span, std::int64_t precision = kWorkingPrecision);

/// sum c_i f_{N_i} with f_N = sum_{n in N} p^(m_sigma(n)) e_sigma(n) on Z_p.
/// The span's ground should be N0.
ZooEntry lip_fN(const Span& span, std::int64_t precision = kWorkingPrecision);

/// f_beta(x) = p^-n (1+y)^beta when ord_p x = -n <= 0 and y is the part of x
/// at positions >= 1; 0 on pZ_p. beta in Z_p, nonzero.
ZooEntry fbeta(const PadicNumber& beta, std::int64_t precision = kWorkingPrecision);

/// x_1^k_1 ... x_m^k_m with a nonzero coefficient.
struct Monomial {
  PadicNumber coefficient;
  std::vector<std::int64_t> exponents;
};
using Polynomial = std::vector<Monomial>;

/// Checks: nonzero coefficients, pairwise distinct exponent tuples of length
/// vars, no free term. Throws DomainError.
void validate_polynomial(const Polynomial& poly, std::size_t vars);

/// h_i = p^i, i = 1..m: distinct elements of pZ_p standing in for Hamel basis
/// vectors.
std::vector<PadicNumber> surrogate_basis(Prime p, int m);

/// beta_r = sum_i k_{r,i} h_i. Throws DomainError unless they are pairwise
/// distinct and nonzero.
std::vector<PadicNumber> aggregate_exponents(const Polynomial& poly, const std::vector<PadicNumber>& h);

/// The derivative of P(f_h1, ..., f_hm) grouped by total degree:
/// sum_q p^(-n k_q) sum_s alpha_{q,s} beta_{q,s} (1+y)^(beta_{q,s} - 1).
struct GroupedDerivative {
  struct Group {
    std::int64_t degree;
    std::vector<PadicNumber> alphas;
    std::vector<PadicNumber> betas;
  };
  std::vector<Group> groups;  // degrees strictly decreasing
};

GroupedDerivative group_by_degree(const Polynomial& poly, const std::vector<PadicNumber>& betas);

/// sum_s alpha_s beta_s (1+y)^(beta_s - 1) for one group.
PadicNumber group_sum(const GroupedDerivative::Group& g, const PadicNumber& y, std::int64_t precision);

/// The grouped closed form at x = (digits at positions -n..0) + y.
PadicNumber grouped_derivative(const GroupedDerivative& gd, std::int64_t n, const PadicNumber& y,
                               std::int64_t precision);

/// y_1 with S_1(y_1) != 0 for the top-degree group, and the n_0 from which
/// |P'(p^-n + y_1)| = p^(n k_1) |S_1(y_1)|.
struct GrowthWitness {
  PadicNumber y1;
  PadicNumber leading_sum;
  std::int64_t top_degree;
  std::int64_t n0;
};

/// Throws InsufficientPrecision when no y_1 turns up within the search depth.
GrowthWitness find_growth_witness(const GroupedDerivative& gd, Prime p, std::int64_t precision,
                                  int search_depth = 2);

/// P(entries...). The derivative follows the product rule from the entries'
/// derivatives. When every entry is an f_beta the closed form is attached
/// as well, with growth and nonvanishing claims.
ZooEntry poly_combine(const std::vector<ZooEntry>& entries, const Polynomial& poly,
                      std::int64_t precision = kWorkingPrecision);

/// Searches y = d_1 p + ... + d_depth p^depth (depth 1 first) for
/// sum gamma_i (1+y)^alpha_i != sum gamma_i. An empty result means the
/// budget ran out, not that the combination is constant.
std::optional<PadicNumber> check_nonconstant_combination(const std::vector<PadicNumber>& gammas,
                                                         const std::vector<PadicNumber>& alphas,
                                                         int search_depth,
                                                         std::int64_t precision = kWorkingPrecision);

/// g_beta(x) = p^n (p^(-n^2) (x - a))^beta on a + p^(n^2) + p^(n^2+1) Z_p, n >= 1; else 0.
ZooEntry gbeta(const PadicNumber& beta, const PadicNumber& a, std::int64_t precision = kWorkingPrecision);
/// F_beta = f_beta + g_beta.
ZooEntry Fbeta(const PadicNumber& beta, const PadicNumber& a, std::int64_t precision = kWorkingPrecision);

/// sum c_i f_{N_i} with f_N = p^n on the sphere |x| = p^(-n^2), n in N; else 0.
ZooEntry sphere_fN(const Span& span);
/// beta g^k, g the N = {1, 2, ...} case of sphere_fN.
ZooEntry sphere_g(const PadicNumber& beta, std::int64_t k = 1);

/// First n with (x_{2n}, x_{2n+1}) = (0, 0) among the first k pairs, or -1
/// when those pairs are all nonzero.
std::int64_t first_zero_pair(const PadicNumber& x, std::int64_t k);
/// No zero digit pair among the first k. Throws InsufficientPrecision when a
/// needed digit is unknown.
bool E_prefix_member(const PadicNumber& x, std::int64_t k);

/// f = x when no digit pair vanishes, the truncation sum_{i <= 2n+1} x_i p^i
/// before the first zero pair (n+1), 0 when (x_0, x_1) = (0, 0).
ZooEntry pair_f(Prime p, std::int64_t precision = kWorkingPrecision);
/// g(p^n + p^(n+1) x') = p^n f(x') for n >= 1; else 0.
ZooEntry pair_g(Prime p, std::int64_t precision = kWorkingPrecision);
/// sum c_i g restricted to the balls p^n + p^(n+1) Z_p with n in N_i.
ZooEntry pair_fN(const Span& span, std::int64_t precision = kWorkingPrecision);

ZooEntry zero_entry(Prime p);
ZooEntry identity_entry(Prime p);

}  // namespace padic::zoo
