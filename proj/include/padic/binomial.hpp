#pragma once

#include <cstdint>

#include "padic/padic_number.hpp"

namespace padic {

/// (1+y)^alpha = sum_i C(alpha, i) y^i for y in pZ_p and alpha in Z_p.
///
/// The result is a unit in 1 + pZ_p known modulo
/// p^min(abs_precision, N_y, N_alpha + ord_p y), which is what the inputs
/// determine: the map is 1-Lipschitz in y and |y|-Lipschitz in alpha.
///
/// Terms i >= abs_precision vanish modulo p^abs_precision since
/// |C(alpha, i) y^i| <= p^-i. The running product alpha(alpha-1).../i! is
/// carried modulo p^(abs_precision + ord_p((abs_precision-1)!)) so the
/// divisions by i lose no output digits.
///
/// Throws DomainError unless |y| <= 1/p and |alpha| <= 1.
PadicNumber pow_one_plus(const PadicNumber& y, const PadicNumber& alpha,
                         std::int64_t abs_precision = PadicNumber::kDefaultPrecision);

/// ord_p(n!) by Legendre's formula.
std::int64_t ord_p_factorial(std::int64_t n, std::int64_t p);

}  // namespace padic
