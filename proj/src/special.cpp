#include "gcircle/special.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gcircle/error.hpp"
#include "gcircle/numeric.hpp"

namespace gcircle {

namespace {

void check_order(int order, const char* who) {
  if (order != 0 && order != 1)
    throw ArgumentError(std::string(who) + ": order must be 0 or 1");
}

long double bessel_series(int order, long double z) {
  const long double half = z / 2.0L;
  const long double q = -half * half;
  long double term = order == 0 ? 1.0L : half;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (std::abs(term) < 1e-24L) break;
  }
  return sum;
}

long double bessel_asymptotic(int order, long double z) {
  const long double mu = 4.0L * order * order;
  const long double eight_z = 8.0L * z;
  long double p = 1.0L, q = 0.0L;
  long double term = 1.0L;
  for (int k = 1; k < 100; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    const long double next = term * (mu - odd * odd) / (k * eight_z);
    if (std::abs(next) > std::abs(term)) break;  // past the smallest term
    term = next;
    // k odd feeds Q with signs +, -, +...; k even feeds P with -, +, -...
    const bool negative = (k / 2) % 2 == 1;
    const long double signed_term = negative ? -term : term;
    if (k % 2 == 1)
      q += signed_term;
    else
      p += signed_term;
    if (std::abs(term) < 1e-20L) break;
  }
  const long double phase = z - (2 * order + 1) * kPi<long double> / 4.0L;
  return std::sqrt(2.0L / (kPi<long double> * z)) * (p * std::cos(phase) - q * std::sin(phase));
}

}  // namespace

BesselEval bessel_eval(int order, double z) {
  check_order(order, "bessel_eval");
  if (!(z >= 0.0) || !std::isfinite(z)) throw ArgumentError("bessel_eval: z must be finite and >= 0");
  BesselEval out{order, z, 0.0, BesselMethod::power_series, z > kBesselAccurateMax};
  if (z <= kBesselSwitch) {
    out.value = static_cast<double>(bessel_series(order, z));
  } else {
    out.method = BesselMethod::asymptotic;
    out.value = static_cast<double>(bessel_asymptotic(order, z));
  }
  return out;
}

double bessel_oracle(int order, double z) {
  check_order(order, "bessel_oracle");
  if (!(z >= 0.0) || z > 1e3) throw ArgumentError("bessel_oracle: z must lie in [0, 1e3]");
  // Aliasing error of the M-interval rule is of order J_M(z), negligible for
  // M well above z.
  const int M = 2 * static_cast<int>(std::ceil(z)) + 80;
  const long double step = kPi<long double> / M;
  auto f = [&](int j) {
    const long double t = j * step;
    return std::cos(order * t - static_cast<long double>(z) * std::sin(t));
  };
  CompensatedSum<long double> sum;
  sum += 0.5L * (f(0) + f(M));
  for (int j = 1; j < M; ++j) sum += f(j);
  return static_cast<double>(sum.value() / M);
}

std::complex<double> gauss_sum_sq(std::uint64_t k, std::int64_t h) {
  if (k == 0) throw ArgumentError("gauss_sum_sq: k must be >= 1");
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t hr = ((h % kk) + kk) % kk;
  if (std::gcd(hr, kk) != 1)
    throw ArgumentError("gauss_sum_sq: gcd(h, k) = " + std::to_string(std::gcd(hr, kk)) +
                        " != 1 for k = " + std::to_string(k) + ", h = " + std::to_string(h));
  CompensatedSum<long double> re, im;
  const long double unit = 2.0L * kPi<long double> / kk;
  for (std::uint64_t x = 1; x <= k; ++x) {
    const auto residue = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(hr) * ((x * x) % k)) % k);
    const long double angle = unit * residue;
    re += std::cos(angle);
    im += std::sin(angle);
  }
  const std::complex<long double> g(re.value(), im.value());
  const auto sq = g * g;
  return {static_cast<double>(sq.real()), static_cast<double>(sq.imag())};
}

double hardy_partial(const ArithTables& tables, double x, std::uint64_t N) {
  if (N > tables.limit())
    throw DomainError("hardy_partial: N = " + std::to_string(N) + " exceeds table limit " +
                      std::to_string(tables.limit()));
  if (!(x > 0.0)) throw DomainError("hardy_partial: x must be > 0");
  CompensatedSum<long double> sum;
  const long double two_pi = 2.0L * kPi<long double>;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const auto rn = tables.r(n);
    if (rn == 0) continue;
    const long double root = std::sqrt(static_cast<long double>(x) * n);
    const double j1 = bessel_j(1, static_cast<double>(two_pi * root));
    sum += rn * static_cast<long double>(j1) / std::sqrt(static_cast<long double>(n));
  }
  return static_cast<double>(std::sqrt(static_cast<long double>(x)) * sum.value());
}

double truncated_p(const ArithTables& tables, double x, std::uint64_t N) {
  if (!(x >= 2.0)) throw DomainError("truncated_p: x must be >= 2");
  if (N < 2 || N > tables.limit())
    throw DomainError("truncated_p: N = " + std::to_string(N) + " outside [2, " +
                      std::to_string(tables.limit()) + "]");
  constexpr long double pi = kPi<long double>;
  CompensatedSum<long double> sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const auto rn = tables.r(n);
    if (rn == 0) continue;
    // Reduce sqrt(x n) mod 1 before scaling by 2 pi so the cosine sees a
    // small, accurately known argument.
    const long double root = std::sqrt(static_cast<long double>(x) * n);
    const long double frac = root - std::floor(root);
    sum += rn * std::pow(static_cast<long double>(n), -0.75L) * std::cos(2.0L * pi * frac + pi / 4.0L);
  }
  return static_cast<double>(-std::pow(static_cast<long double>(x), 0.25L) / pi * sum.value());
}

}  // namespace gcircle
