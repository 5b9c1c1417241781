#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "gcircle/arith.hpp"
#include "gcircle/error.hpp"
#include "oracles.hpp"

using namespace gcircle;

TEST_CASE("chi mod 4") {
  CHECK(chi(1) == 1);
  CHECK(chi(4) == 0);
  CHECK(chi(7) == -1);
  CHECK(chi(5) == 1);
}

TEST_CASE("tables for N = 10") {
  const ArithTables t(10);
  const std::vector<unsigned> r{4, 4, 0, 4, 8, 0, 0, 4, 4, 8};
  const std::vector<unsigned> d{1, 2, 2, 3, 2, 4, 2, 4, 3, 4};
  for (std::uint64_t n = 1; n <= 10; ++n) {
    CHECK(t.r(n) == r[n - 1]);
    CHECK(t.d(n) == d[n - 1]);
  }
}

TEST_CASE("tables for N = 1") {
  const ArithTables t(1);
  CHECK(t.r(1) == 4);
  CHECK(t.d(1) == 1);
  CHECK(t.sigma(1) == 1);
}

TEST_CASE("tables agree with brute-force enumeration") {
  const ArithTables t(600);
  for (std::uint64_t n = 1; n <= 600; ++n) {
    REQUIRE(t.r(n) == oracle::r_brute(static_cast<std::int64_t>(n)));
    REQUIRE(t.d(n) == oracle::d_brute(n));
    REQUIRE(t.sigma(n) == oracle::sigma_brute(n));
  }
}

TEST_CASE("table invariants") {
  const std::uint64_t N = 100'000;
  const ArithTables t(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    REQUIRE(t.r(n) % 4 == 0);
    if (n >= 2) {
      REQUIRE(t.d(n) >= 2);
      REQUIRE(t.sigma(n) >= n + 1);
    }
  }
  // Primes p = 3 mod 4 to an odd power kill r(n).
  for (std::uint64_t p : {3u, 7u, 11u, 19u}) {
    for (std::uint64_t m = 1; p * m <= N; ++m) {
      std::uint64_t e = 0, k = p * m;
      while (k % p == 0) {
        k /= p;
        ++e;
      }
      if (e % 2 == 1) REQUIRE(t.r(p * m) == 0);
    }
  }
}

TEST_CASE("r_single") {
  CHECK(r_single(25) == 12);
  CHECK(r_single(3) == 0);
  CHECK(r_single(65) == 16);
  CHECK(r_single(65) == oracle::r_brute(65));
  CHECK(r_single(1) == 4);
  const ArithTables t(200'000);
  for (std::uint64_t n = 1; n <= t.limit(); ++n) REQUIRE(r_single(n) == t.r(n));
}

TEST_CASE("r/4 is multiplicative") {
  const std::uint64_t N = 200'000;
  const ArithTables t(N);
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 2000) {
    const std::uint64_t m = rng() % 1000 + 1, n = rng() % 1000 + 1;
    if (std::gcd(m, n) != 1 || m * n > N) continue;
    REQUIRE(t.r(m * n) / 4 == (t.r(m) / 4) * (t.r(n) / 4));
    ++checked;
  }
}

TEST_CASE("sum of r(n) plus the origin counts lattice points in the disk") {
  const ArithTables t(3000);
  std::uint64_t sum = 0;
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    sum += t.r(n);
    if (n % 97 == 0 || n == 3000) REQUIRE(sum + 1 == oracle::disk_points(static_cast<std::int64_t>(n)));
  }
}

TEST_CASE("v2") {
  CHECK(v2(1) == 0);
  CHECK(v2(8) == 3);
  CHECK(v2(12) == 2);
}

TEST_CASE("g(h) closed and divisor-sum forms") {
  CHECK(g_closed(1) == Rational(8));
  CHECK(g_closed(2) == Rational(4));
  CHECK(g_closed(4) == Rational(10));
  CHECK(g_direct(1) == Rational(8));
  CHECK(g_direct(3) == Rational(32, 3));
  CHECK(g_direct(4) == Rational(10));
  for (std::uint64_t h = 1; h <= 100'000; ++h) REQUIRE(g_closed(h) == g_direct(h));
}

TEST_CASE("g(h) has denominator dividing h") {
  for (std::uint64_t h = 1; h <= 5000; ++h)
    REQUIRE(static_cast<std::uint64_t>(h) % static_cast<std::uint64_t>(g_closed(h).denominator()) == 0);
}

TEST_CASE("sigma_single matches the table") {
  const ArithTables t(50'000);
  for (std::uint64_t n = 1; n <= t.limit(); ++n) REQUIRE(sigma_single(n) == t.sigma(n));
}

TEST_CASE("arith error paths") {
  CHECK_THROWS_AS(ArithTables(0), ArgumentError);
  try {
    ArithTables too_big(ArithTables::kMaxLimit + 1);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.required() == ArithTables::kMaxLimit);
  }
  CHECK_THROWS_AS(r_single(0), ArgumentError);
  CHECK_THROWS_AS(g_closed(0), ArgumentError);
  CHECK_THROWS_AS(g_direct(0), ArgumentError);
}
