#include <random>

#include "doctest.h"
#include "padic/binomial.hpp"
#include "padic/errors.hpp"
#include "padic/padic_number.hpp"
#include "padic/text.hpp"
#include "support/random_padic.hpp"

using namespace padic;

TEST_CASE("primes are certified") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(2147483647).value() == 2147483647);
  CHECK_THROWS_AS(Prime(1), DomainError);
  CHECK_THROWS_AS(Prime(9), DomainError);
}

TEST_CASE("from_rational") {
  Prime p(5);
  auto one = PadicNumber::from_rational(1, 1, p, 4);
  CHECK(one.valuation() == 0);
  CHECK(one.digits() == std::vector<std::uint32_t>{1});

  auto five = PadicNumber::from_rational(5, 1, p, 4);
  CHECK(five.valuation() == 1);
  CHECK(five.abs_value() == Norm::power(5, -1));

  CHECK_THROWS_AS(PadicNumber::from_rational(1, 0, p, 4), DomainError);

  for (std::int64_t q : {2, 3, 5, 7}) {
    Prime pq(q);
    const std::int64_t n = 20;
    auto g = PadicNumber::from_rational(1, 1 - q, pq, n);
    CHECK(g.digits() == std::vector<std::uint32_t>(n, 1));
    auto back = g * PadicNumber::exact(pq, 1 - q);
    CHECK(agrees(back, PadicNumber::one(pq)));
    CHECK(back.abs_precision() == n);
  }
}

TEST_CASE("absolute value") {
  Prime p(3);
  CHECK(PadicNumber::zero(p).abs_value().is_zero());
  for (int n = -5; n <= 5; ++n) {
    CHECK(PadicNumber::power_of_p(p, n).abs_value() == Norm::power(3, -n));
    auto s = PadicNumber::power_of_p(p, n) + PadicNumber::power_of_p(p, n + 1);
    CHECK(s.abs_value() == Norm::power(3, -n));
  }
  CHECK_THROWS_AS(PadicNumber::bounded_zero(p, 7).abs_value(), InsufficientPrecision);
  CHECK(PadicNumber::bounded_zero(p, 7).norm_bound() == Norm::power(3, -7));
}

TEST_CASE("precision propagation") {
  Prime p(5);
  auto x = PadicNumber::from_rational(3, 7, p, 10);
  auto y = PadicNumber::from_rational(2, 11, p, 6);
  CHECK((x + y).abs_precision() == 6);
  CHECK((x + PadicNumber::zero(p)).abs_precision() == 10);
  CHECK(agrees(x + PadicNumber::zero(p), x));

  auto px = x * PadicNumber::power_of_p(p, 3);
  CHECK(px.valuation() == 3);
  CHECK(px.abs_precision() == 13);
  CHECK((px * y).rel_precision() == 6);

  auto z = x - x;
  CHECK(z.is_bounded_zero());
  CHECK(z.abs_precision() == 10);
  CHECK_THROWS_AS(PadicNumber::one(p) / z, InsufficientPrecision);
  CHECK_THROWS_AS(PadicNumber::one(p) / PadicNumber::zero(p), DomainError);
  CHECK_THROWS_AS(x + PadicNumber::one(Prime(3)), PrimeMismatch);
}

TEST_CASE("exact arithmetic stays exact") {
  Prime p(2);
  auto a = PadicNumber::power_of_p(p, 40) - PadicNumber::power_of_p(p, 80);
  CHECK(a.is_exact());
  CHECK(a.valuation() == 40);
  auto q = (PadicNumber::power_of_p(p, 80) - PadicNumber::zero(p)) / (PadicNumber::power_of_p(p, 40) - a);
  CHECK(exactly_equal(q, PadicNumber::one(p)));
  CHECK(exactly_equal(PadicNumber::exact(p, mpq_class(1, 3)) * PadicNumber::exact(p, 3), PadicNumber::one(p)));
}

TEST_CASE("digits and residues") {
  Prime p(7);
  auto x = PadicNumber::exact(p, 3 + 5 * 7 + 2 * 49);
  CHECK(x.digits() == std::vector<std::uint32_t>{3, 5, 2});
  CHECK(x.digit(1) == 5);
  CHECK(x.digit(100) == 0);
  CHECK(x.residue(2) == 38);
  auto minus_one = PadicNumber::exact(p, -1);
  CHECK(minus_one.digit(30) == 6);
  CHECK_THROWS_AS(minus_one.digits(), DomainError);
  auto capped = minus_one.with_precision(5);
  CHECK(capped.digits() == std::vector<std::uint32_t>(5, 6));
  CHECK_THROWS_AS(capped.digit(5), InsufficientPrecision);
  CHECK(exactly_equal(capped.head(3), PadicNumber::exact(p, 342)));
}

TEST_CASE("ultrametric and multiplicativity fuzz") {
  std::mt19937_64 rng(7);
  for (std::int64_t q : {2, 3, 5}) {
    Prime p(q);
    std::uniform_int_distribution<std::int64_t> val(-10, 10);
    for (int i = 0; i < 2000; ++i) {
      auto x = testing::random_capped(rng, p, val(rng), 12);
      auto y = testing::random_capped(rng, p, val(rng), 12);
      CHECK((x * y).abs_value() == x.abs_value() * y.abs_value());
      auto s = x + y;
      Norm m = std::max(x.abs_value(), y.abs_value());
      CHECK(s.norm_bound() <= m);
      if (x.abs_value() != y.abs_value()) CHECK(s.abs_value() == m);
    }
  }
}

TEST_CASE("precision soundness") {
  std::mt19937_64 rng(11);
  Prime p(3);
  for (int i = 0; i < 500; ++i) {
    auto a = testing::random_exact(rng, p, 1000);
    auto b = testing::random_exact(rng, p, 1000);
    if (b.is_zero()) continue;
    for (auto op : {0, 1, 2, 3}) {
      auto lo = [&](const PadicNumber& u, const PadicNumber& v) {
        switch (op) {
          case 0: return u + v;
          case 1: return u - v;
          case 2: return u * v;
          default: return u / v;
        }
      };
      auto coarse = lo(a.with_precision(8), b.with_precision(10));
      auto fine = lo(a.with_precision(20), b.with_precision(25));
      auto exact = lo(a, b);
      CHECK(agrees(coarse, fine));
      CHECK(agrees(coarse, exact));
    }
  }
}

TEST_CASE("pow_one_plus") {
  Prime p(5);
  auto y = PadicNumber::power_of_p(p, 1);
  CHECK(agrees(pow_one_plus(y, PadicNumber::zero(p), 20), PadicNumber::one(p)));
  CHECK(agrees(pow_one_plus(y, PadicNumber::one(p), 20), PadicNumber::exact(p, 6)));
  CHECK(pow_one_plus(y, PadicNumber::one(p), 20).abs_precision() == 20);
  // (1+p)^3 exactly.
  CHECK(agrees(pow_one_plus(y, PadicNumber::exact(p, 3), 30), PadicNumber::exact(p, 216)));
  // Negative integer exponent: (1+p)^-1.
  CHECK(agrees(pow_one_plus(y, PadicNumber::exact(p, -1), 30), PadicNumber::exact(p, mpq_class(1, 6))));
  // Rational exponent: ((1+p)^(1/2))^2 = 1+p for p odd.
  auto r = pow_one_plus(y, PadicNumber::exact(p, mpq_class(1, 2)), 30);
  CHECK(agrees(r * r, PadicNumber::exact(p, 6)));

  CHECK_THROWS_AS(pow_one_plus(PadicNumber::one(p), PadicNumber::one(p)), DomainError);
  CHECK_THROWS_AS(pow_one_plus(y, PadicNumber::power_of_p(p, -1)), DomainError);

  std::mt19937_64 rng(3);
  for (std::int64_t q : {2, 3, 5}) {
    Prime pq(q);
    for (int i = 0; i < 30; ++i) {
      auto a = testing::random_integral(rng, pq, 30);
      auto yy = testing::random_integral(rng, pq, 29) * PadicNumber::power_of_p(pq, 1);
      auto u = pow_one_plus(yy, a, 30);
      auto v = pow_one_plus(yy, -a, 30);
      CHECK(agrees(u * v, PadicNumber::one(pq)));
      CHECK(u.digit(0) == 1);
      CHECK((u - PadicNumber::one(pq)).norm_bound() <= Norm::power(q, -1));
    }
  }
}

TEST_CASE("pow_one_plus precision soundness") {
  std::mt19937_64 rng(5);
  Prime p(2);
  for (int i = 0; i < 30; ++i) {
    auto a = testing::random_exact(rng, p, 99);
    if (a.is_nonzero() && a.valuation() < 0) continue;
    auto y = testing::random_integral(rng, p, 40) * PadicNumber::power_of_p(p, 2);
    auto coarse = pow_one_plus(y.with_precision(15), a, 64);
    auto fine = pow_one_plus(y, a, 40);
    CHECK(coarse.abs_precision() == 15);
    CHECK(agrees(coarse, fine));
  }
}

TEST_CASE("text round trip") {
  Prime p(5);
  CHECK(to_string(PadicNumber::zero(p)) == "0");
  CHECK(to_string(PadicNumber::bounded_zero(p, 4)) == "0 (mod 5^4)");
  auto x = PadicNumber::from_rational(1, -4, p, 6);
  CHECK(to_string(x) == "1 1 1 1 1 1 * 5^0 (mod 5^6)");
  CHECK(to_string(PadicNumber::power_of_p(p, 2, 7)) == "2 1 * 5^2");
  CHECK(to_string(PadicNumber::exact(p, -3)) == "-3 * 5^0");
  CHECK(to_string(PadicNumber::exact(p, mpq_class(2, 3))) == "2/3 * 5^0");
  CHECK(to_string(PadicNumber::exact(p, mpq_class(-1, 10))) == "-1/2 * 5^-1");
  CHECK(to_string(PadicNumber::exact(p, mpq_class(-1, 5))) == "-1 * 5^-1");

  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    auto v = testing::random_capped(rng, p, static_cast<std::int64_t>(i % 9) - 4, 1 + i % 10);
    auto back = parse_padic(to_string(v), p);
    CHECK(back.abs_precision() == v.abs_precision());
    CHECK(agrees(back, v));
    auto e = testing::random_exact(rng, p, 500);
    CHECK(exactly_equal(parse_padic(to_string(e), p), e) == !e.is_exact_zero());
  }
}

TEST_CASE("expression parsing") {
  Prime p(3);
  CHECK(exactly_equal(parse_padic("p^2", p), PadicNumber::exact(p, 9)));
  CHECK(exactly_equal(parse_padic("3*p^-1 + 2", p), PadicNumber::exact(p, 3)));
  CHECK(exactly_equal(parse_padic("1/(1-p)", p), PadicNumber::exact(p, mpq_class(-1, 2))));
  CHECK(exactly_equal(parse_padic("p^(-2)", p), PadicNumber::exact(p, mpq_class(1, 9))));
  auto m = parse_padic("-p^4 (mod p^9)", p);
  CHECK(m.abs_precision() == 9);
  CHECK(agrees(m, PadicNumber::exact(p, -81)));
  CHECK(parse_padic("0", p).is_exact_zero());
  CHECK(parse_padic("0 (mod 3^5)", p).is_bounded_zero());
  CHECK_THROWS_AS(parse_padic("", p), ParseError);
  CHECK_THROWS_AS(parse_padic("p^", p), ParseError);
  CHECK_THROWS_AS(parse_padic("1/0", p), ParseError);
  CHECK_THROWS_AS(parse_padic("1 2 * 5^0", p), ParseError);
  CHECK_THROWS_AS(parse_padic("1 3 * 3^0", p), ParseError);
  CHECK_THROWS_AS(parse_padic("x+1", p), ParseError);
}
