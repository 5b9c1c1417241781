#include "gcircle/lattice.hpp"

#include <cmath>
#include <string>

#include "gcircle/error.hpp"
#include "gcircle/numeric.hpp"

namespace gcircle {

const char* to_string(ErrorKind kind) noexcept {
  return kind == ErrorKind::circle ? "circle" : "divisor";
}

StepProfile::StepProfile(const ArithTables& tables, ErrorKind kind) : kind_(kind) {
  const auto values = kind == ErrorKind::circle ? tables.r_values() : tables.d_values();
  partial_.resize(values.size());
  partial_[0] = 0;
  for (std::size_t n = 1; n < values.size(); ++n) partial_[n] = partial_[n - 1] + values[n];
}

long double smooth_main(ErrorKind kind, long double x) {
  if (kind == ErrorKind::circle) return kPi<long double> * x - 1.0L;
  if (x == 0.0L) return 0.25L;
  return x * (std::log(x) + 2.0L * kEulerGamma - 1.0L) + 0.25L;
}

namespace {

void check_range(const StepProfile& profile, long double x, const char* who) {
  if (!(x >= 0.0L) || x > static_cast<long double>(profile.limit()))
    throw DomainError(std::string(who) + ": x = " + std::to_string(static_cast<double>(x)) +
                      " outside [0, " + std::to_string(profile.limit()) + "]");
}

void check_kind(const StepProfile& profile, ErrorKind kind, const char* who) {
  if (profile.kind() != kind)
    throw ArgumentError(std::string(who) + ": expected a " + to_string(kind) + " profile");
}

}  // namespace

long double error_term(const StepProfile& profile, long double x) {
  check_range(profile, x, "error_term");
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  long double count = static_cast<long double>(profile.partial(n));
  if (n >= 1 && static_cast<long double>(n) == x) count -= 0.5L * profile.jump(n);
  return count - smooth_main(profile.kind(), x);
}

long double error_left(const StepProfile& profile, std::uint64_t n) {
  check_range(profile, n, "error_left");
  return static_cast<long double>(profile.partial(n - 1)) - smooth_main(profile.kind(), n);
}

long double error_right(const StepProfile& profile, std::uint64_t n) {
  check_range(profile, n, "error_right");
  return static_cast<long double>(profile.partial(n)) - smooth_main(profile.kind(), n);
}

ErrorTermSample sample_error_term(const StepProfile& profile, double x) {
  return {x, static_cast<double>(error_term(profile, x)), profile.kind()};
}

double p_of_x(const StepProfile& profile, double x) {
  check_kind(profile, ErrorKind::circle, "p_of_x");
  return static_cast<double>(error_term(profile, x));
}

double p_closed(const StepProfile& profile, double x) {
  check_kind(profile, ErrorKind::circle, "p_closed");
  check_range(profile, x, "p_closed");
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  return static_cast<double>(static_cast<long double>(profile.partial(n)) -
                             smooth_main(ErrorKind::circle, x));
}

double delta_of_x(const StepProfile& profile, double x) {
  check_kind(profile, ErrorKind::divisor, "delta_of_x");
  return static_cast<double>(error_term(profile, x));
}

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace

std::uint64_t lattice_count_nonzero(double x) {
  if (!(x >= 0.0)) throw DomainError("lattice_count_nonzero: x must be >= 0");
  const auto X = static_cast<std::uint64_t>(std::floor(x));
  const std::uint64_t A = isqrt(X);
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a <= A; ++a) {
    const std::uint64_t column = 2 * isqrt(X - a * a) + 1;
    count += a == 0 ? column : 2 * column;
  }
  return count - 1;
}

double p_gauss_oracle(double x) {
  const long double count = static_cast<long double>(lattice_count_nonzero(x));
  return static_cast<double>(count - kPi<long double> * x + 1.0L);
}

double mean_square_p(const StepProfile& profile, double X1, double X2) {
  check_kind(profile, ErrorKind::circle, "mean_square_p");
  check_range(profile, X2, "mean_square_p");
  if (!(X1 >= 0.0) || X1 > X2) throw DomainError("mean_square_p: need 0 <= X1 <= X2");
  constexpr long double pi = kPi<long double>;
  CompensatedSum<long double> total;
  // On [n, n+1): P(n + s) = v0 - pi s with v0 = partial(n) + 1 - pi n.
  auto piece = [&](std::uint64_t n, long double a, long double b) {
    const long double v0 = static_cast<long double>(profile.partial(n)) + 1.0L - pi * n;
    auto F = [&](long double s) { return s * (v0 * v0 - pi * v0 * s + pi * pi * s * s / 3.0L); };
    total += F(b) - F(a);
  };
  const auto first = static_cast<std::uint64_t>(std::floor(X1));
  const auto last = static_cast<std::uint64_t>(std::floor(X2));
  if (first == last) {
    piece(first, X1 - first, X2 - first);
    return static_cast<double>(total.value());
  }
  piece(first, static_cast<long double>(X1) - first, 1.0L);
  for (std::uint64_t n = first + 1; n < last; ++n) {
    const long double v0 = static_cast<long double>(profile.partial(n)) + 1.0L - pi * n;
    total += v0 * v0 - pi * v0 + pi * pi / 3.0L;
  }
  if (static_cast<long double>(X2) > last) piece(last, 0.0L, static_cast<long double>(X2) - last);
  return static_cast<double>(total.value());
}

double q_of_x(const StepProfile& profile, double X, double c32) {
  return mean_square_p(profile, X) - c32 * std::pow(X, 1.5);
}

PointwiseReport pointwise_report(const StepProfile& profile, double X_max, std::uint64_t samples) {
  if (samples == 0) throw ArgumentError("pointwise_report: samples must be >= 1");
  if (!(X_max >= 1.0)) throw ArgumentError("pointwise_report: X_max must be >= 1");
  check_range(profile, X_max, "pointwise_report");

  PointwiseReport report;
  report.rows.reserve(samples);
  const double growth = std::pow(X_max, 1.0 / static_cast<double>(samples));
  double lo = 1.0;
  // Right limit at 1 opens the scan.
  long double carry_x = 1.0L;
  long double carry_v = error_right(profile, 1);

  for (std::uint64_t i = 1; i <= samples; ++i) {
    const double hi = i == samples ? X_max : std::pow(growth, static_cast<double>(i));
    long double best_x = carry_x, best_v = carry_v;
    auto consider = [&](long double x, long double v) {
      if (std::abs(v) > std::abs(best_v)) {
        best_x = x;
        best_v = v;
      }
    };
    const auto n_lo = static_cast<std::uint64_t>(std::floor(lo)) + 1;
    const auto n_hi = static_cast<std::uint64_t>(std::floor(hi));
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
      consider(n, error_left(profile, n));
      consider(n, error_right(profile, n));
    }
    // Value at the right end, approached from the left.
    const long double hi_value =
        static_cast<long double>(hi) == std::floor(static_cast<long double>(hi))
            ? error_left(profile, static_cast<std::uint64_t>(hi))
            : error_term(profile, hi);
    consider(hi, hi_value);

    const double x = static_cast<double>(best_x);
    const double v = static_cast<double>(best_v);
    report.rows.push_back({x, v, std::abs(v) / std::pow(x, 0.25), std::abs(v) / std::pow(x, 23.0 / 73.0)});
    if (std::abs(v) > report.max_abs) {
      report.max_abs = std::abs(v);
      report.argmax = x;
    }
    // The next cell starts just right of hi.
    carry_x = hi;
    carry_v = static_cast<long double>(hi) == std::floor(static_cast<long double>(hi))
                  ? error_right(profile, static_cast<std::uint64_t>(hi))
                  : error_term(profile, hi);
    lo = hi;
  }
  return report;
}

}  // namespace gcircle
