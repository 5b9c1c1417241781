// special.hpp
//
// Bessel J0/J1, squared quadratic Gauss sums, and the two series
// representations of P(x): Hardy's Bessel series and the truncated
// cosine-sum formula.

#pragma once

#include <complex>
#include <cstdint>

#include "gcircle/arith.hpp"

namespace gcircle {

enum class BesselMethod { power_series, asymptotic };

struct BesselEval {
  int order;
  double argument;
  double value;
  BesselMethod method;
  // Set for z > kBesselAccurateMax. The expansion itself stays accurate, but
  // a double argument that large carries an absolute uncertainty of about
  // z * 2^-53, which the oscillating value inherits.
  bool degraded;
};

// Ascending series (in long double) below this point, Hankel's asymptotic
// expansion above. Both agree to ~1e-13 there.
inline constexpr double kBesselSwitch = 20.0;
inline constexpr double kBesselAccurateMax = 1e6;

// J_order(z) for order in {0, 1} and z >= 0; absolute error <= 1e-10 for
// z <= 1e6. Throws ArgumentError otherwise.
BesselEval bessel_eval(int order, double z);
inline double bessel_j(int order, double z) { return bessel_eval(order, z).value; }

// (1/pi) int_0^pi cos(n t - z sin t) dt by the trapezoid rule, which is
// spectrally accurate for this periodic integrand. For z <= 1e3.
double bessel_oracle(int order, double z);

// (sum_{x=1}^{k} e(h x^2 / k))^2 by direct summation; requires gcd(h, k) = 1.
std::complex<double> gauss_sum_sq(std::uint64_t k, std::int64_t h);

// x^{1/2} sum_{n<=N} r(n) n^{-1/2} J1(2 pi sqrt(x n)).
double hardy_partial(const ArithTables& tables, double x, std::uint64_t N);

// -(x^{1/4}/pi) sum_{n<=N} r(n) n^{-3/4} cos(2 pi sqrt(x n) + pi/4),
// for x >= 2 and 2 <= N <= tables.limit().
double truncated_p(const ArithTables& tables, double x, std::uint64_t N);

}  // namespace gcircle
