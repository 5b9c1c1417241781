#include <doctest.h>

#include <cmath>
#include <numeric>
#include <numbers>

#include "gcircle/error.hpp"
#include "gcircle/lattice.hpp"
#include "gcircle/special.hpp"

using namespace gcircle;
using std::numbers::pi;

namespace {

const ArithTables& tables() {
  static const ArithTables t(200'000);
  return t;
}

}  // namespace

TEST_CASE("Bessel values at known points") {
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 1.0) == doctest::Approx(0.4400505857449335).epsilon(1e-14));
  CHECK(bessel_oracle(1, 0.0) == doctest::Approx(0.0));
  CHECK(std::abs(bessel_j(1, 10.0) - bessel_oracle(1, 10.0)) <= 1e-10);
  CHECK(bessel_eval(0, 5.0).method == BesselMethod::power_series);
  CHECK(bessel_eval(0, 50.0).method == BesselMethod::asymptotic);
}

TEST_CASE("J0 changes sign across its first zero") {
  const double z0 = 2.404825557695773;
  CHECK(bessel_oracle(0, z0 - 1e-6) > 0.0);
  CHECK(bessel_oracle(0, z0 + 1e-6) < 0.0);
  CHECK(std::abs(bessel_oracle(0, z0)) < 1e-12);
  CHECK(std::abs(bessel_j(0, z0)) < 1e-12);
}

TEST_CASE("Bessel against the quadrature oracle on a log grid") {
  double worst = 0;
  for (int order : {0, 1}) {
    CHECK(std::abs(bessel_j(order, 0.0) - bessel_oracle(order, 0.0)) <= 1e-10);
    for (int i = 0; i < 1000; ++i) {
      const double z = std::pow(10.0, -3.0 + 6.0 * i / 999.0);
      worst = std::max(worst, std::abs(bessel_j(order, z) - bessel_oracle(order, z)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("Bessel against the standard library") {
  for (double z = 0.1; z < 1e4; z *= 1.37) {
    CHECK(std::abs(bessel_j(0, z) - std::cyl_bessel_j(0.0, z)) <= 1e-10);
    CHECK(std::abs(bessel_j(1, z) - std::cyl_bessel_j(1.0, z)) <= 1e-10);
  }
}

TEST_CASE("Bessel branches agree at the switch point") {
  for (int order : {0, 1}) {
    const double below = bessel_j(order, std::nextafter(kBesselSwitch, 0.0));
    const double above = bessel_j(order, std::nextafter(kBesselSwitch, 100.0));
    CHECK(std::abs(below - above) <= 1e-11);
  }
}

TEST_CASE("Bessel is bounded and flags degraded arguments") {
  for (double z = 0; z < 2e6; z = z * 1.9 + 0.3) {
    CHECK(std::abs(bessel_j(0, z)) <= 1.0);
    CHECK(std::abs(bessel_j(1, z)) <= 1.0);
  }
  CHECK_FALSE(bessel_eval(1, 1e6).degraded);
  CHECK(bessel_eval(1, 2e6).degraded);
  CHECK_THROWS_AS(bessel_eval(2, 1.0), ArgumentError);
  CHECK_THROWS_AS(bessel_eval(0, -1.0), ArgumentError);
  CHECK_THROWS_AS(bessel_eval(0, INFINITY), ArgumentError);
  CHECK_THROWS_AS(bessel_oracle(0, 2e3), ArgumentError);
}

TEST_CASE("Gauss sums at sample points") {
  CHECK(std::abs(gauss_sum_sq(1, 1) - std::complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(gauss_sum_sq(5, 1) - std::complex<double>(5, 0)) < 1e-12);
  CHECK(std::abs(gauss_sum_sq(6, 1)) < 1e-12);
  CHECK_THROWS_AS(gauss_sum_sq(6, 4), ArgumentError);
  CHECK_THROWS_AS(gauss_sum_sq(0, 1), ArgumentError);
}

TEST_CASE("Gauss sums by residue class of k") {
  for (std::uint64_t k = 1; k <= 500; ++k) {
    for (std::int64_t h = -3; h <= static_cast<std::int64_t>(k); ++h) {
      if (std::gcd(static_cast<std::uint64_t>(std::abs(h)), k) != 1) continue;
      const auto g = gauss_sum_sq(k, h);
      const double kd = static_cast<double>(k);
      if (k % 4 == 2) {
        REQUIRE(std::abs(g) <= 1e-6 * kd);
      } else if (k % 2 == 1) {
        // (G(h,k))^2 = (h|k)^2 chi(k) k = chi(k) k for odd k.
        REQUIRE(std::abs(g - std::complex<double>(chi(k) * kd, 0)) <= 1e-6 * kd);
      } else {
        // 4 | k: |G|^2 = 2k.
        REQUIRE(std::abs(std::abs(g) - 2 * kd) <= 1e-6 * kd);
      }
    }
  }
}

TEST_CASE("Hardy series approaches P(x)") {
  const StepProfile profile(tables(), ErrorKind::circle);
  CHECK(hardy_partial(tables(), 10.5, 0) == 0.0);
  const double p = p_of_x(profile, 10.5);
  CHECK(std::abs(hardy_partial(tables(), 10.5, 100'000) - p) < 0.05);
  CHECK_THROWS_AS(hardy_partial(tables(), 10.5, 300'000), DomainError);
}

TEST_CASE("truncated cosine sum") {
  const StepProfile profile(tables(), ErrorKind::circle);
  CHECK(std::isfinite(truncated_p(tables(), 2.0, 2)));
  const double x = 10'000.5;
  const double diff = truncated_p(tables(), x, 10'000) - p_of_x(profile, x);
  CHECK(std::abs(diff) < 5.0);
  const double coarse = truncated_p(tables(), x, 22) - p_of_x(profile, x);
  CHECK(std::abs(coarse) < 4.0 * std::pow(x, 1.0 / 3.0));
  CHECK(std::abs(truncated_p(tables(), 10.5, 100'000) - p_of_x(profile, 10.5)) < 0.05);
  CHECK_THROWS_AS(truncated_p(tables(), 1.5, 10), DomainError);
  CHECK_THROWS_AS(truncated_p(tables(), 10.0, 1), DomainError);
  CHECK_THROWS_AS(truncated_p(tables(), 10.0, 300'000), DomainError);
}
