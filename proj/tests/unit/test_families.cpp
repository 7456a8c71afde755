#include "doctest.h"
#include "padic/errors.hpp"
#include "padic/families.hpp"

using namespace padic;

TEST_CASE("generate_family ranges") {
  CHECK_THROWS_AS(generate_family(0), DomainError);
  CHECK_THROWS_AS(generate_family(21), DomainError);
  CHECK(generate_family(20).size() == 20);
}

TEST_CASE("k = 1 over N0 is the odd numbers") {
  auto fam = generate_family(1, Ground::NaturalsWithZero);
  for (std::uint64_t m = 0; m < 50; ++m) CHECK(fam[0].contains(m) == (m % 2 == 1));
  auto odd = cell(fam, {true});
  auto even = cell(fam, {false});
  CHECK(odd.first() == 1);
  CHECK(even.first() == 0);
  CHECK(even.next_after(1000) == 1002);
}

TEST_CASE("ground N excludes 0") {
  auto fam = generate_family(2, Ground::Naturals);
  auto zeros = cell(fam, {false, false});
  CHECK(zeros.first() == 4);
  CHECK_FALSE(zeros.contains(0));
  auto fam0 = generate_family(2, Ground::NaturalsWithZero);
  CHECK(cell(fam0, {false, false}).first() == 0);
}

TEST_CASE("every cell has exactly one member per period") {
  for (int k = 1; k <= 10; ++k) {
    auto fam = generate_family(k, Ground::NaturalsWithZero);
    const std::uint64_t period = std::uint64_t{1} << k;
    std::vector<int> hits(period, 0);
    for (std::uint64_t m = 0; m < period; ++m) {
      std::uint64_t sig = 0;
      for (int i = 0; i < k; ++i) {
        if (fam[static_cast<std::size_t>(i)].contains(m)) sig |= std::uint64_t{1} << i;
      }
      ++hits[sig];
    }
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("enumeration matches membership") {
  auto fam = generate_family(4);
  for (std::uint64_t r = 0; r < 16; ++r) {
    std::vector<bool> sig(4);
    for (int i = 0; i < 4; ++i) sig[static_cast<std::size_t>(i)] = (r >> i) & 1U;
    auto c = cell(fam, sig);
    std::uint64_t prev = 0;
    bool first = true;
    for (int j = 0; j < 100; ++j) {
      std::uint64_t m = c.next();
      if (!first) CHECK(m > prev);
      first = false;
      prev = m;
      for (int i = 0; i < 4; ++i) CHECK(fam[static_cast<std::size_t>(i)].contains(m) == sig[static_cast<std::size_t>(i)]);
    }
    // No member skipped.
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m <= prev; ++m) count += c.contains(m);
    CHECK(count == 100);
  }
}

TEST_CASE("the leading cell (1, 0, ..., 0)") {
  auto fam = generate_family(3);
  auto c = cell(fam, {true, false, false});
  for (int j = 0; j < 20; ++j) {
    auto n = c.next();
    CHECK(fam[0].contains(n));
    CHECK_FALSE(fam[1].contains(n));
    CHECK_FALSE(fam[2].contains(n));
    CHECK(c.next_after(n) == n + 8);
  }
}

TEST_CASE("cell argument checks") {
  auto fam = generate_family(3);
  CHECK_THROWS_AS(cell(fam, {true}), DomainError);
  std::vector<IndexSet> mixed{IndexSet(3, 0), IndexSet(2, 1), IndexSet(3, 2)};
  CHECK_THROWS_AS(cell(mixed, {true, true, true}), DomainError);
  CHECK_FALSE(IndexSet(3, 0) == IndexSet(3, 1));
}
