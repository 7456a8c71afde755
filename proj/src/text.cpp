#include "padic/text.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "padic/errors.hpp"

namespace padic {

namespace {

std::string join_digits(const std::vector<std::uint32_t>& ds) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out << ' ';
    out << ds[i];
  }
  return out.str();
}

std::string power_suffix(std::int64_t p, std::int64_t v) {
  return " * " + std::to_string(p) + "^" + std::to_string(v);
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Prime p) : text_(text), p_(p) {}

  PadicNumber parse() {
    PadicNumber v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse \"" + std::string(text_) + "\": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PadicNumber expr() {
    PadicNumber acc(p_);
    bool first = true;
    for (;;) {
      bool negative = false;
      if (eat('+')) {
      } else if (eat('-')) {
        negative = true;
      } else if (!first) {
        break;
      }
      PadicNumber t = term();
      acc = negative ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  PadicNumber term() {
    PadicNumber acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        PadicNumber d = factor();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  PadicNumber factor() {
    if (eat('-')) return -factor();
    PadicNumber b = base();
    if (eat('^')) {
      bool paren = eat('(');
      bool negative = eat('-');
      mpz_class e = integer();
      if (paren && !eat(')')) fail("missing ')'");
      if (!e.fits_slong_p()) fail("exponent too large");
      long k = e.get_si();
      if (negative) k = -k;
      if (k < 0 && b.is_zero()) fail("negative power of zero");
      return b.pow(k);
    }
    return b;
  }

  PadicNumber base() {
    skip_space();
    if (eat('(')) {
      PadicNumber v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < text_.size() && text_[pos_] == 'p') {
      ++pos_;
      return PadicNumber::exact(p_, p_.value());
    }
    return PadicNumber::exact(p_, mpq_class(integer()));
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  Prime p_;
  std::size_t pos_ = 0;
};

void check_base(const std::string& base, Prime p, std::string_view text) {
  if (base != "p" && base != std::to_string(p.value())) {
    throw ParseError("base " + base + " does not match p = " + std::to_string(p.value()) + " in \"" +
                     std::string(text) + "\"");
  }
}

}  // namespace

std::string to_string(const PadicNumber& x) {
  const std::int64_t p = x.prime().value();
  switch (x.state()) {
    case PadicNumber::State::ExactZero:
      return "0";
    case PadicNumber::State::BoundedZero:
      return "0 (mod " + std::to_string(p) + "^" + std::to_string(x.abs_precision()) + ")";
    case PadicNumber::State::Nonzero:
      break;
  }
  const std::int64_t v = x.valuation();
  if (!x.is_exact()) {
    return join_digits(x.digits()) + power_suffix(p, v) + " (mod " + std::to_string(p) + "^" +
           std::to_string(x.abs_precision()) + ")";
  }
  if (x.has_finite_expansion()) return join_digits(x.digits()) + power_suffix(p, v);
  mpq_class unit = x.exact_value();
  if (v >= 0) {
    unit /= mpq_class(prime_power(p, v));
  } else {
    unit *= mpq_class(prime_power(p, -v));
  }
  if (unit.get_den() == 1) {
    auto ds = PadicNumber::exact(x.prime(), mpq_class(-unit.get_num())).digits();
    return "-" + join_digits(ds) + power_suffix(p, v);
  }
  return unit.get_num().get_str() + "/" + unit.get_den().get_str() + power_suffix(p, v);
}

PadicNumber parse_padic(std::string_view text, Prime p) {
  static const std::regex mod_suffix(R"(^(.*?)\(\s*mod\s+(p|\d+)\s*\^\s*(-?\d+)\s*\)\s*$)");
  static const std::regex digit_list(R"(^\s*(-)?\s*(\d+(?:\s+\d+)+)\s*\*\s*(p|\d+)\s*\^\s*(-?\d+)\s*$)");

  std::string body(text);
  std::int64_t precision = PadicNumber::kExact;
  std::smatch m;
  if (std::regex_match(body, m, mod_suffix)) {
    check_base(m[2], p, text);
    precision = std::stoll(m[3]);
    body = m[1];
  }
  try {
    PadicNumber value(p);
    if (std::regex_match(body, m, digit_list)) {
      check_base(m[3], p, text);
      std::vector<std::uint32_t> ds;
      std::istringstream in(m[2]);
      std::uint64_t d = 0;
      while (in >> d) {
        if (d >= static_cast<std::uint64_t>(p.value())) {
          throw ParseError("digit " + std::to_string(d) + " out of range in \"" + std::string(text) + "\"");
        }
        ds.push_back(static_cast<std::uint32_t>(d));
      }
      value = PadicNumber::from_digits(p, std::stoll(m[4]), ds, PadicNumber::kExact);
      if (m[1].matched) value = -value;
    } else {
      std::size_t first = body.find_first_not_of(" \t");
      if (first == std::string::npos) throw ParseError("empty value");
      value = ExpressionParser(body, p).parse();
    }
    return value.with_precision(precision);
  } catch (const DomainError& e) {
    throw ParseError(std::string("cannot parse \"") + std::string(text) + "\": " + e.what());
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range in \"" + std::string(text) + "\"");
  }
}

}  // namespace padic
