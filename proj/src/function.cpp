#include "padic/function.hpp"

#include <algorithm>

#include "padic/errors.hpp"

namespace padic {

PadicFunction::PadicFunction(Prime p, Domain domain, Evaluator eval, Modulus modulus, std::string name)
    : prime_(p), domain_(domain), eval_(std::move(eval)), modulus_(std::move(modulus)), name_(std::move(name)) {
  if (!eval_) throw DomainError("PadicFunction without an evaluator");
}

PadicNumber PadicFunction::operator()(const PadicNumber& x) const {
  if (x.prime() != prime_) {
    throw PrimeMismatch("function over Q_" + std::to_string(prime_.value()) + " applied to an element of Q_" +
                        std::to_string(x.prime().value()));
  }
  if (domain_ == Domain::Zp && !x.is_integral()) {
    throw DomainError((name_.empty() ? std::string("function") : name_) + " is defined on Z_p only");
  }
  return eval_(x);
}

std::int64_t PadicFunction::required_precision(std::int64_t output_precision) const {
  return modulus_ ? modulus_(output_precision) : output_precision;
}

PadicFunction PadicFunction::constant(const PadicNumber& c, Domain domain) {
  return PadicFunction(
      c.prime(), domain, [c](const PadicNumber&) { return c; },
      [](std::int64_t) { return std::int64_t{0}; }, "constant");
}

PadicFunction PadicFunction::identity(Prime p, Domain domain) {
  return PadicFunction(p, domain, [](const PadicNumber& x) { return x; }, {}, "identity");
}

PadicFunction PadicFunction::monomial(const PadicNumber& c, std::int64_t k, Domain domain) {
  return PadicFunction(c.prime(), domain, [c, k](const PadicNumber& x) { return c * x.pow(k); }, {},
                       "monomial");
}

PadicFunction linear_combination(const std::vector<PadicNumber>& coeffs, const std::vector<PadicFunction>& fs) {
  if (coeffs.size() != fs.size() || fs.empty()) {
    throw DomainError("linear_combination needs one coefficient per function");
  }
  const Prime p = fs.front().prime();
  Domain domain = Domain::Qp;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].prime() != p || coeffs[i].prime() != p) throw PrimeMismatch("linear_combination over mixed primes");
    if (fs[i].domain() == Domain::Zp) domain = Domain::Zp;
  }
  auto eval = [coeffs, fs, p](const PadicNumber& x) {
    PadicNumber s(p);
    for (std::size_t i = 0; i < fs.size(); ++i) s += coeffs[i] * fs[i](x);
    return s;
  };
  auto modulus = [coeffs, fs](std::int64_t m) {
    std::int64_t need = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      need = std::max(need, fs[i].required_precision(m - coeffs[i].valuation()));
    }
    return need;
  };
  return PadicFunction(p, domain, eval, modulus, "linear_combination");
}

}  // namespace padic
