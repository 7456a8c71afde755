#pragma once

#include <functional>
#include <string>
#include <vector>

#include "padic/padic_number.hpp"

namespace padic {

enum class Domain { Qp, Zp };

/// A function on Q_p or Z_p evaluated on finite-precision inputs.
///
/// The modulus maps an output absolute precision M to the input absolute
/// precision phi(M) that suffices to get M correct output digits. The
/// evaluator reports the precision it actually achieved in its result, and
/// raises InsufficientPrecision when the input cannot decide which case of a
/// piecewise definition applies.
class PadicFunction {
 public:
  using Evaluator = std::function<PadicNumber(const PadicNumber&)>;
  using Modulus = std::function<std::int64_t(std::int64_t)>;

  PadicFunction(Prime p, Domain domain, Evaluator eval, Modulus modulus = {}, std::string name = {});

  Prime prime() const noexcept { return prime_; }
  Domain domain() const noexcept { return domain_; }
  const std::string& name() const noexcept { return name_; }

  /// Throws PrimeMismatch for foreign inputs and DomainError for inputs outside Z_p
  /// when the domain is Z_p.
  PadicNumber operator()(const PadicNumber& x) const;

  /// phi(M); the identity when no modulus was given.
  std::int64_t required_precision(std::int64_t output_precision) const;

  static PadicFunction constant(const PadicNumber& c, Domain domain = Domain::Qp);
  static PadicFunction identity(Prime p, Domain domain = Domain::Qp);
  /// x -> c x^k.
  static PadicFunction monomial(const PadicNumber& c, std::int64_t k, Domain domain = Domain::Qp);

 private:
  Prime prime_;
  Domain domain_;
  Evaluator eval_;
  Modulus modulus_;
  std::string name_;
};

/// sum_i coeffs[i] * fs[i]. The domain is Z_p if any term lives on Z_p.
PadicFunction linear_combination(const std::vector<PadicNumber>& coeffs,
                                 const std::vector<PadicFunction>& fs);

}  // namespace padic
