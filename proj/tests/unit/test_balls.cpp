#include <cmath>

#include "doctest.h"
#include "padic/errors.hpp"
#include "padic/zoo/balls.hpp"

using namespace padic;
using namespace padic::zoo;

TEST_CASE("ball membership and disjointness") {
  Prime p(3);
  Ball b{PadicNumber::power_of_p(p, 2), 5};
  CHECK(contains(b, PadicNumber::power_of_p(p, 2) + PadicNumber::power_of_p(p, 5)));
  CHECK_FALSE(contains(b, PadicNumber::power_of_p(p, 2) + PadicNumber::power_of_p(p, 4)));
  CHECK_FALSE(contains(b, PadicNumber::zero(p)));
  CHECK_THROWS_AS(contains(b, PadicNumber::power_of_p(p, 2).with_precision(4)), InsufficientPrecision);
  CHECK(disjoint(Ball{PadicNumber::one(p), 1}, Ball{PadicNumber::exact(p, 2), 1}));
  CHECK_FALSE(disjoint(Ball{PadicNumber::one(p), 1}, Ball{PadicNumber::exact(p, 4), 2}));
}

TEST_CASE("ball systems are pairwise disjoint up to 50") {
  for (std::int64_t q : {2, 3, 5, 7}) {
    Prime p(q);
    CHECK(bump_balls(p, 50).first_overlap(50) == -1);
    CHECK(pair_balls(p, 50).first_overlap(50) == -1);
    CHECK(gbeta_balls(PadicNumber::zero(p), 7).first_overlap(7) == -1);
    CHECK(gbeta_balls(PadicNumber::exact(p, mpq_class(1, 7 == q ? 2 : 7)), 7).first_overlap(7) == -1);
    CHECK(sphere_system(p, 7).first_overlap(1000) == -1);
    CHECK(vdp_balls(p, 50).first_overlap(50) == -1);
  }
  // A deliberately overlapping system is caught.
  Prime p(2);
  BallSystem bad{{Ball{PadicNumber::one(p), 1}, Ball{PadicNumber::exact(p, 3), 2}}};
  CHECK(bad.first_overlap(2) >= 0);
}

TEST_CASE("locate finds the right ball") {
  Prime p(5);
  auto sys = bump_balls(p, 10);
  CHECK(sys.locate(PadicNumber::power_of_p(p, 3) + PadicNumber::power_of_p(p, 7)) == 2);
  CHECK(sys.locate(PadicNumber::power_of_p(p, 3) + PadicNumber::power_of_p(p, 6)) == -1);
}

TEST_CASE("first greedy balls for p = 2") {
  auto g = greedy_vdp_indices(2, 64);
  REQUIRE(g.size() >= 2);
  CHECK(g[0] == 1);
  CHECK(g[1] == 2);
  CHECK(disjoint(Ball{PadicNumber::exact(Prime(2), 1), 1}, Ball{PadicNumber::exact(Prime(2), 2), 2}));
}

TEST_CASE("sigma agrees with the greedy construction") {
  for (std::int64_t q : {2, 3, 5, 7}) {
    const std::uint64_t limit = q == 2 ? 5000 : 3000;
    auto g = greedy_vdp_indices(q, limit);
    REQUIRE(!g.empty());
    for (std::size_t n = 0; n < g.size(); ++n) CHECK(sigma(n, q) == g[n]);
  }
}

TEST_CASE("sigma is strictly increasing and inverted by sigma_index") {
  for (std::int64_t q : {2, 3, 11}) {
    for (std::uint64_t n = 0; n < 100; ++n) {
      CHECK(sigma(n, q) < sigma(n + 1, q));
      const std::int64_t j = static_cast<std::int64_t>(n / static_cast<std::uint64_t>(q - 1));
      const auto d = static_cast<std::uint32_t>(n % static_cast<std::uint64_t>(q - 1) + 1);
      CHECK(sigma(n, q) == prime_power(q, j) * d);
      CHECK(sigma_index(j, d, q) == n);
    }
  }
  CHECK(sigma(10000, 2) == prime_power(2, 10000));
}

TEST_CASE("m schedule") {
  CHECK(m_schedule(1, 2) == 1);
  CHECK(m_schedule(8, 2) == 4);
  CHECK(m_schedule(2, 2) == 1);
  CHECK_THROWS_AS(m_schedule(0, 2), DomainError);
  // Long-double oracle for moderate k.
  for (std::int64_t q : {2, 3, 5}) {
    std::int64_t prev = 0;
    for (long k = 2; k < 3000; ++k) {
      long double v = std::log(static_cast<long double>(k) * std::log(static_cast<long double>(k))) /
                      std::log(static_cast<long double>(q));
      auto expected = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(v)));
      auto m = m_schedule(k, q);
      CHECK(m == expected);
      CHECK(m >= prev);
      prev = m;
    }
  }
  // m_(p^N) >= N, which the lip modulus relies on.
  for (std::int64_t n = 1; n < 200; ++n) CHECK(m_schedule(prime_power(3, n), 3) >= n);
}
