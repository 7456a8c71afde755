#include "padic/zoo/registry.hpp"

#include <map>
#include <sstream>

#include "padic/errors.hpp"
#include "padic/text.hpp"

namespace padic::zoo {

namespace {

Span span_for(const ZooParams& q, Ground ground) {
  if (q.coefficients.empty()) return Span::single(q.prime, q.family_size, q.bit, ground);
  generate_family(static_cast<int>(q.coefficients.size()), ground);
  return Span{q.prime, q.coefficients, ground};
}

PadicNumber beta_or_default(const ZooParams& q) { return q.beta.value_or(PadicNumber::exact(q.prime, 2)); }

Polynomial default_polynomial(Prime p) {
  return {Monomial{PadicNumber::one(p), {2, 1}}, Monomial{PadicNumber::exact(p, 3), {0, 1}}};
}

}  // namespace

const std::vector<RegistryItem>& registry() {
  static const std::vector<RegistryItem> items = {
      {"bump", "p^2n on the balls p^n + p^(2n+1) Z_p, n in N: derivative 0 but not strictly differentiable"},
      {"spread", "digit spreading sum_{n in N} a_n p^2n: strictly differentiable, not of order 2"},
      {"lip", "van der Put series sum_{n in N} p^(m_sigma(n)) e_sigma(n): in N^1 but in no Lip_alpha, alpha > 1"},
      {"fbeta", "f_beta = p^-n (1+y)^beta off pZ_p: differentiable with unbounded derivative"},
      {"fbeta_poly", "polynomial in f_h1, ..., f_hm with surrogate exponents h_i = p^i"},
      {"gbeta", "p^n (p^(-n^2)(x - a))^beta on the balls a + p^(n^2) + p^(n^2+1) Z_p"},
      {"Fbeta", "f_beta + g_beta: continuous, differentiable except at a"},
      {"sphere", "p^n on the spheres |x| = p^(-n^2), n in N"},
      {"sphere_g", "beta g^k for the sphere function with every n"},
      {"pair_f", "identity on E, truncated at the first zero digit pair"},
      {"pair_g", "f rescaled into the balls p^n + p^(n+1) Z_p"},
      {"pair_fN", "g masked to the balls with n in N"},
      {"zero", "the zero function"},
      {"identity", "x -> x"},
  };
  return items;
}

std::string canonical_name(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"bump_fN", "bump"},     {"spread_gN", "spread"},      {"lip_fN", "lip"},
      {"sphere_fN", "sphere"}, {"zero-function", "zero"},
  };
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

ZooEntry make_entry(const std::string& requested, const ZooParams& q) {
  const Prime p = q.prime;
  const std::string name = canonical_name(requested);
  if (name == "bump") return bump_fN(span_for(q, Ground::Naturals), q.precision);
  if (name == "spread") return spread_gN(span_for(q, Ground::Naturals), q.precision);
  if (name == "lip") return lip_fN(span_for(q, Ground::NaturalsWithZero), q.precision);
  if (name == "fbeta") return fbeta(beta_or_default(q), q.precision);
  if (name == "fbeta_poly") {
    Polynomial poly = q.polynomial.value_or(default_polynomial(p));
    if (poly.empty()) throw DomainError("empty polynomial");
    const auto h = surrogate_basis(p, static_cast<int>(poly.front().exponents.size()));
    std::vector<ZooEntry> fs;
    for (const auto& hi : h) fs.push_back(fbeta(hi, q.precision));
    aggregate_exponents(poly, h);
    ZooEntry e = poly_combine(fs, poly, q.precision);
    e.name = "fbeta_poly";
    return e;
  }
  const PadicNumber a = q.a.value_or(PadicNumber::zero(p));
  if (name == "gbeta") return gbeta(beta_or_default(q), a, q.precision);
  if (name == "Fbeta") return Fbeta(beta_or_default(q), a, q.precision);
  if (name == "sphere") return sphere_fN(span_for(q, Ground::Naturals));
  if (name == "sphere_g") return sphere_g(q.beta.value_or(PadicNumber::one(p)), q.power);
  if (name == "pair_f") return pair_f(p, q.precision);
  if (name == "pair_g") return pair_g(p, q.precision);
  if (name == "pair_fN") return pair_fN(span_for(q, Ground::Naturals), q.precision);
  if (name == "zero") return zero_entry(p);
  if (name == "identity") return identity_entry(p);
  std::string known;
  for (const auto& item : registry()) known += (known.empty() ? "" : ", ") + item.name;
  throw DomainError("unknown entry '" + requested + "' (known: " + known + ")");
}

Polynomial parse_polynomial(const std::string& text, Prime p) {
  Polynomial poly;
  std::stringstream terms(text);
  std::string term;
  std::size_t vars = 0;
  while (std::getline(terms, term, ';')) {
    auto colon = term.find(':');
    if (colon == std::string::npos) throw ParseError("polynomial term '" + term + "' lacks ':'");
    Monomial m{parse_padic(term.substr(0, colon), p), {}};
    std::stringstream es(term.substr(colon + 1));
    std::string e;
    while (std::getline(es, e, ',')) {
      try {
        std::size_t used = 0;
        m.exponents.push_back(std::stoll(e, &used));
        if (e.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(e);
      } catch (const std::logic_error&) {
        throw ParseError("bad exponent '" + e + "' in polynomial term '" + term + "'");
      }
    }
    if (vars == 0) vars = m.exponents.size();
    poly.push_back(std::move(m));
  }
  if (poly.empty()) throw ParseError("empty polynomial");
  try {
    validate_polynomial(poly, vars);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid polynomial: ") + e.what());
  }
  return poly;
}

}  // namespace padic::zoo
