// laplace.hpp
//
// Laplace transforms int_0^inf E(x)^2 e^{-x/T} dx of the circle (E = P) and
// divisor (E = Delta) error terms, the Dirichlet-series constants in their
// leading terms, and the weight functions used to bound the residual.
//
// Truncation: the integral is cut at the first integer x_max where the tail
// under the envelope |E(x)| <= 3 sqrt(x),
//     int_{x_max}^inf 9 x e^{-x/T} dx = 9 T (x_max + T) e^{-x_max/T},
// drops below rel_tol times the running total. The envelope is checked on
// the whole profile before any integral is taken.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gcircle/arith.hpp"
#include "gcircle/lattice.hpp"

namespace gcircle {

inline constexpr double kDefaultRelTol = 1e-6;
inline constexpr double kEnvelopeConstant = 3.0;

enum class SeriesKind { r_squared, d_squared };

const char* to_string(SeriesKind kind) noexcept;

// sum_{n<=terms} f(n)^2 n^{-3/2}, f = r or d.
//
// tail_bound: partial summation against S(x) = sum_{n<=x} f(n)^2 <=
// C x (log x + 1)^p (p = 1 for r, 3 for d), with C twice the largest ratio
// seen on the table. Non-increasing in terms_used.
//
// tail_estimate: the same partial summation with S(x) replaced by a
// least-squares fit x (a_0 + a_1 log x + ... + a_p log^p x) on [terms/1000,
// terms]. Its error is governed by the oscillating part of S, not by the
// envelope, so corrected() is far closer to the full series than value.
struct SeriesConstant {
  SeriesKind kind;
  std::uint64_t terms_used;
  double value;
  double tail_bound;
  double tail_estimate;
  double envelope_constant;  // C above

  double corrected() const noexcept { return value + tail_estimate; }
};

SeriesConstant series_constant(const ArithTables& tables, SeriesKind kind, std::uint64_t terms);

struct LaplaceIntegral {
  double T;
  double integral;
  double truncation_bound;
  std::uint64_t x_max;
  // |order-2q minus order-q| quadrature totals; zero for the closed-form
  // circle case.
  double quadrature_delta = 0;
};

struct LaplaceEstimate {
  double T;
  double integral;
  double truncation_bound;
  double main_term;
  double residual;  // integral - main_term
};

// max over x in [1, limit] of |E(x)| / sqrt(x). Throws std::logic_error if
// it exceeds kEnvelopeConstant.
double validate_envelope(const StepProfile& profile);

// Closed form on each unit interval: (v0 - pi s)^2 e^{-(n+s)/T} integrated in
// local coordinates. Throws CapacityError naming the required limit when the
// profile ends before the truncation point.
LaplaceIntegral laplace_p2(const StepProfile& profile, double T, double rel_tol = kDefaultRelTol);
// Integral over [0, x_max] and the envelope bound on the rest.
LaplaceIntegral laplace_p2_fixed(const StepProfile& profile, double T, std::uint64_t x_max);

// Gauss-Legendre of order 16 and 32 on each unit interval (geometric pieces on
// [0, 1] where x log x is not smooth); integral is the order-32 value.
LaplaceIntegral laplace_d2(const StepProfile& profile, double T, double rel_tol = kDefaultRelTol);

// Smallest integer X with 9 T (X + T) e^{-X/T} < rel_tol * total.
std::uint64_t truncation_point(double T, double rel_tol, double total);

// (1/4) (T/pi)^{3/2} c_r - T, using c_r.corrected().
double laplace_main_p(const SeriesConstant& c_r, double T);
// (1/8) (T/pi)^{3/2} c_d, using c_d.corrected(); the T log^2 T, T log T and
// T terms are left to fit_a1.
double laplace_main_d(const SeriesConstant& c_d, double T);

LaplaceEstimate estimate_p(const StepProfile& profile, const SeriesConstant& c_r, double T,
                           double rel_tol = kDefaultRelTol);

struct ResidualRow {
  double T;
  double integral;
  double truncation_bound;
  double main_term;
  double residual;
  double scaled;  // residual / T^{2/3}
};

struct ResidualScan {
  std::vector<ResidualRow> rows;
  double slope = 0;  // of log |residual| against log T; 0 with one row
};

ResidualScan residual_scan_p(const StepProfile& profile, const SeriesConstant& c_r,
                             std::span<const double> T_list, double rel_tol = kDefaultRelTol);

struct A1Fit {
  Eigen::Vector3d coefficients;  // (A1, A2, A3) of y/T ~ A1 log^2 T + A2 log T + A3
  std::vector<double> T;
  std::vector<double> y_over_T;
};

// y(T) = laplace_d2(T) - laplace_main_d(c_d, T), fitted as above.
A1Fit fit_divisor_terms(const StepProfile& profile_d, const SeriesConstant& c_d,
                        std::span<const double> T_list, double rel_tol = kDefaultRelTol);
inline double fit_a1(const StepProfile& profile_d, const SeriesConstant& c_d,
                     std::span<const double> T_list, double rel_tol = kDefaultRelTol) {
  return fit_divisor_terms(profile_d, c_d, T_list, rel_tol).coefficients(0);
}

// f(t,h) = {-(sqrt(t+h) - sqrt t)^2 + (3(2t+h) + 2 sqrt(t(t+h))) / (16 pi^2 sqrt(t(t+h)) T)}
//          * t^{-3/4} (t+h)^{-3/4},   h^2 <= t.
double weight_f(double t, double h, double T);

// |u(t,h)| / (e^{-2Th^2/t} (h^2 t^{-7/2} + T^{-1} t^{-5/2} + T h^4 t^{-9/2})), where
// u = d/dt (e^{-pi^2 T (sqrt(t+h) - sqrt t)^2} f(t,h)) is taken by Richardson-
// extrapolated central differences. Both exponentials are combined before
// evaluation so the ratio stays finite when each factor underflows.
double weight_u_ratio(double t, double h, double T);
inline bool weight_u_bound_check(double t, double h, double T, double C = 100.0) {
  return weight_u_ratio(t, h, T) <= C;
}

// e^{-alpha} alpha^alpha - e^{-x} x^alpha; non-negative for x >= 0, alpha > 0.
double elementary_gap(double x, double alpha);

}  // namespace gcircle
