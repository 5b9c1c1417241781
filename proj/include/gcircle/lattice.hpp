// lattice.hpp
//
// Error terms of the circle problem
//     P(x) = sum'_{n<=x} r(n) - pi x + 1
// and of the divisor problem
//     Delta(x) = sum'_{n<=x} d(n) - x (log x + 2 gamma - 1) - 1/4,
// where sum' halves the last term when x is an integer. Both are evaluated
// exactly from the integer partial sums of r or d.

#pragma once

#include <cstdint>
#include <vector>

#include "gcircle/arith.hpp"

namespace gcircle {

enum class ErrorKind { circle, divisor };

const char* to_string(ErrorKind kind) noexcept;

// Summatory step function of r (circle) or d (divisor):
// partial(n) = sum_{m<=n} f(m), partial(0) = 0.
class StepProfile {
 public:
  StepProfile(const ArithTables& tables, ErrorKind kind);

  ErrorKind kind() const noexcept { return kind_; }
  std::uint64_t limit() const noexcept { return partial_.size() - 1; }
  std::int64_t partial(std::uint64_t n) const noexcept { return partial_[n]; }
  // f(n) = partial(n) - partial(n-1), n >= 1.
  std::int64_t jump(std::uint64_t n) const noexcept { return partial_[n] - partial_[n - 1]; }

 private:
  ErrorKind kind_;
  std::vector<std::int64_t> partial_;
};

struct ErrorTermSample {
  double x;
  double value;
  ErrorKind kind;
};

// The smooth part subtracted from the step function: pi x - 1 for the circle,
// x (log x + 2 gamma - 1) + 1/4 for the divisor problem (0 at x = 0).
long double smooth_main(ErrorKind kind, long double x);

// Error term at x with the primed convention at integer x.
// Throws DomainError unless 0 <= x <= profile.limit().
long double error_term(const StepProfile& profile, long double x);
// One-sided limits at an integer point n (1 <= n <= limit).
long double error_left(const StepProfile& profile, std::uint64_t n);
long double error_right(const StepProfile& profile, std::uint64_t n);

ErrorTermSample sample_error_term(const StepProfile& profile, double x);

// P(x); profile must be of kind circle.
double p_of_x(const StepProfile& profile, double x);
// P without halving: the closed-disk count, i.e. the right limit P(x+).
double p_closed(const StepProfile& profile, double x);
// Delta(x); profile must be of kind divisor.
double delta_of_x(const StepProfile& profile, double x);

// Number of (a, b) != (0, 0) with a^2 + b^2 <= x, by direct enumeration.
std::uint64_t lattice_count_nonzero(double x);
// count - pi x + 1. At integer x this is the closed-disk value (no halving),
// so it agrees with p_of_x only at non-integer x.
double p_gauss_oracle(double x);

// int_{X1}^{X2} P(x)^2 dx, summed from closed forms on each unit interval.
double mean_square_p(const StepProfile& profile, double X1, double X2);
inline double mean_square_p(const StepProfile& profile, double X) {
  return mean_square_p(profile, 0.0, X);
}

// Q(X) = int_0^X P^2 - c32 X^{3/2}.
double q_of_x(const StepProfile& profile, double X, double c32);

struct PointwiseRow {
  double x;
  double value;
  double ratio_quarter;  // |value| / x^{1/4}
  double ratio_huxley;   // |value| / x^{23/73}
};

struct PointwiseReport {
  std::vector<PointwiseRow> rows;  // one per geometric cell
  double max_abs = 0;
  double argmax = 0;
};

// Splits [1, X_max] into `samples` geometric cells and reports, per cell, the
// extreme of |error term| over both one-sided limits at every integer in the
// cell and at the cell ends. Between integers the error term is monotone, so
// this finds the exact supremum over [1, X_max].
PointwiseReport pointwise_report(const StepProfile& profile, double X_max, std::uint64_t samples);

}  // namespace gcircle
