// oracles.hpp
//
// Independent reference computations for the test suites. Nothing here calls
// into the library's evaluation paths.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

// r(n) by enumerating a^2 + b^2 = n.
inline std::uint64_t r_brute(std::int64_t n) {
  std::uint64_t count = 0;
  for (std::int64_t a = -n; a <= n; ++a) {
    if (a * a > n) continue;
    for (std::int64_t b = -n; b <= n; ++b)
      if (a * a + b * b == n) ++count;
  }
  return count;
}

inline std::uint64_t d_brute(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += n % k == 0;
  return c;
}

inline std::uint64_t sigma_brute(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (n % k == 0) s += k;
  return s;
}

// Lattice points (a, b), origin included, with a^2 + b^2 <= X.
inline std::uint64_t disk_points(std::int64_t X) {
  std::uint64_t c = 0;
  std::int64_t A = 0;
  while ((A + 1) * (A + 1) <= X) ++A;
  for (std::int64_t a = -A; a <= A; ++a)
    for (std::int64_t b = -A; b <= A; ++b) c += a * a + b * b <= X;
  return c;
}

// Dirichlet beta(s) = sum (-1)^k (2k+1)^{-s} with the Cohen-Villegas-Zagier
// acceleration for alternating series.
inline long double dirichlet_beta(long double s) {
  const int n = 40;
  long double d = std::pow(3.0L + std::sqrt(8.0L), n);
  d = (d + 1.0L / d) / 2.0L;
  long double b = -1.0L, c = -d, sum = 0.0L;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(2.0L * k + 1.0L, -s);
    b = (static_cast<long double>(k + n) * (k - n) * b) / ((k + 0.5L) * (k + 1.0L));
  }
  return sum / d;
}

// sum r(n)^2 n^{-3/2} = 16 zeta(3/2)^2 beta(3/2)^2 / ((1 + 2^{-3/2}) zeta(3)),
// from the Euler product of the multiplicative function r(n)/4.
inline double r_squared_series() {
  const long double z = std::riemann_zeta(1.5L);
  const long double beta = dirichlet_beta(1.5L);
  return static_cast<double>(16.0L * z * z * beta * beta /
                             ((1.0L + std::pow(2.0L, -1.5L)) * std::riemann_zeta(3.0L)));
}

// sum d(n)^2 n^{-3/2} = zeta(3/2)^4 / zeta(3) (Ramanujan).
inline double d_squared_series() {
  const long double z = std::riemann_zeta(1.5L);
  return static_cast<double>(z * z * z * z / std::riemann_zeta(3.0L));
}

struct QuadratureResult {
  double value;
  double error_estimate;
};

// int_0^X g(x) dx for g smooth on every (n, n+1), by the composite midpoint
// rule with `per_unit` cells per unit interval, Richardson-extrapolated
// against half as many cells.
inline QuadratureResult piecewise_midpoint(const std::function<long double(long double)>& g,
                                           std::uint64_t X, int per_unit) {
  auto rule = [&](int cells) {
    long double total = 0;
    const long double h = 1.0L / cells;
    for (std::uint64_t n = 0; n < X; ++n) {
      long double unit = 0;
      for (int j = 0; j < cells; ++j) unit += g(n + (j + 0.5L) * h);
      total += unit * h;
    }
    return total;
  };
  const long double fine = rule(per_unit);
  const long double coarse = rule(per_unit / 2);
  const long double extrapolated = fine + (fine - coarse) / 3.0L;
  return {static_cast<double>(extrapolated), static_cast<double>(std::abs(fine - coarse))};
}

}  // namespace oracle
