#include "gcircle/laplace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gcircle/error.hpp"
#include "gcircle/fit.hpp"
#include "gcircle/numeric.hpp"

namespace gcircle {

const char* to_string(SeriesKind kind) noexcept {
  return kind == SeriesKind::r_squared ? "r_squared" : "d_squared";
}

namespace {

// int_M^inf t^{-3/2} (log t + shift)^k dt for k = 0..p, by the recurrence
// I_k = 2 M^{-1/2} (log M + shift)^k + 2k I_{k-1}.
std::vector<long double> log_power_tails(long double M, long double shift, int p) {
  std::vector<long double> I(p + 1);
  const long double base = 2.0L / std::sqrt(M);
  const long double L = std::log(M) + shift;
  long double Lk = 1.0L;
  I[0] = base;
  for (int k = 1; k <= p; ++k) {
    Lk *= L;
    I[k] = base * Lk + 2.0L * k * I[k - 1];
  }
  return I;
}

}  // namespace

SeriesConstant series_constant(const ArithTables& tables, SeriesKind kind, std::uint64_t terms) {
  if (terms > tables.limit())
    throw DomainError("series_constant: terms = " + std::to_string(terms) + " exceeds table limit " +
                      std::to_string(tables.limit()));
  const auto f = kind == SeriesKind::r_squared ? tables.r_values() : tables.d_values();
  const int p = kind == SeriesKind::r_squared ? 1 : 3;
  const std::uint64_t limit = tables.limit();

  // Cumulative S(n) = sum f^2 over the whole table: the envelope constant is
  // a property of the table, which keeps tail_bound monotone in terms.
  std::vector<long double> S(limit + 1, 0.0L);
  long double envelope = 0;
  CompensatedSum<long double> value;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const long double sq = static_cast<long double>(f[n]) * f[n];
    S[n] = S[n - 1] + sq;
    const long double L1 = std::log(static_cast<long double>(n)) + 1.0L;
    envelope = std::max(envelope, S[n] / (n * std::pow(L1, p)));
    if (n <= terms) value += sq / (n * std::sqrt(static_cast<long double>(n)));
  }
  envelope *= 2.0L;

  SeriesConstant out{kind, terms, static_cast<double>(value.value()), 0.0, 0.0,
                     static_cast<double>(envelope)};
  if (terms == 0) {
    out.tail_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  const long double M = static_cast<long double>(terms);

  // Binomial expansion of (log t + 1)^p in powers of log t is folded into the
  // shifted recurrence directly.
  const auto shifted = log_power_tails(M, 1.0L, p);
  out.tail_bound = static_cast<double>(1.5L * envelope * shifted[p]);

  // Fit S(x)/x on a geometric grid over [M/1000, M].
  const std::uint64_t lo = std::max<std::uint64_t>(1, terms / 1000);
  const int points = static_cast<int>(std::min<std::uint64_t>(400, terms - lo + 1));
  if (points < p + 1) return out;
  Eigen::MatrixXd design(points, p + 1);
  Eigen::VectorXd rhs(points);
  const double ratio = points > 1 ? std::pow(static_cast<double>(terms) / lo, 1.0 / (points - 1)) : 1.0;
  for (int i = 0; i < points; ++i) {
    auto x = static_cast<std::uint64_t>(std::llround(lo * std::pow(ratio, i)));
    x = std::clamp<std::uint64_t>(x, lo, terms);
    const double L = std::log(static_cast<double>(x));
    double Lk = 1.0;
    for (int k = 0; k <= p; ++k, Lk *= L) design(i, k) = Lk;
    rhs(i) = static_cast<double>(S[x] / x);
  }
  const Eigen::VectorXd a = least_squares(design, rhs);
  const auto plain = log_power_tails(M, 0.0L, p);
  long double integral = 0;
  for (int k = 0; k <= p; ++k) integral += a(k) * plain[k];
  out.tail_estimate =
      static_cast<double>(-S[terms] / (M * std::sqrt(M)) + 1.5L * integral);
  return out;
}

double validate_envelope(const StepProfile& profile) {
  long double worst = 0;
  for (std::uint64_t n = 1; n < profile.limit(); ++n) {
    // E is monotone on (n, n+1) and sqrt(x) >= sqrt(n) there.
    const long double root = std::sqrt(static_cast<long double>(n));
    worst = std::max({worst, std::abs(error_right(profile, n)) / root,
                      std::abs(error_left(profile, n + 1)) / root});
  }
  if (worst > kEnvelopeConstant)
    throw std::logic_error("validate_envelope: |E(x)|/sqrt(x) reaches " +
                           std::to_string(static_cast<double>(worst)) + " on the profile");
  return static_cast<double>(worst);
}

std::uint64_t truncation_point(double T, double rel_tol, double total) {
  auto tail = [&](double X) { return 9.0 * T * (X + T) * std::exp(-X / T); };
  const double target = rel_tol * total;
  if (!(target > 0)) throw ArgumentError("truncation_point: rel_tol * total must be > 0");
  double hi = T;
  while (tail(hi) >= target) hi *= 2.0;
  double lo = 0;
  for (int i = 0; i < 200 && hi - lo > 0.5; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tail(mid) >= target ? lo : hi) = mid;
  }
  return static_cast<std::uint64_t>(std::ceil(hi));
}

namespace {

double envelope_tail(double T, double X) { return 9.0 * T * (X + T) * std::exp(-X / T); }

void check_T(double T, const char* who) {
  if (!(T > 0) || !std::isfinite(T)) throw ArgumentError(std::string(who) + ": T must be > 0");
}

// m_k = int_0^1 s^k e^{-lambda s} ds, k = 0, 1, 2.
std::array<long double, 3> exp_moments(long double lambda) {
  std::array<long double, 3> m{};
  if (lambda <= 1.0L) {
    for (int k = 0; k < 3; ++k) {
      long double term = 1.0L, sum = 0;
      for (int j = 0; j < 40; ++j) {
        sum += term / (k + j + 1);
        term *= -lambda / (j + 1);
      }
      m[k] = sum;
    }
  } else {
    const long double e = std::exp(-lambda);
    m[0] = -std::expm1(-lambda) / lambda;
    for (int k = 1; k < 3; ++k) m[k] = (k * m[k - 1] - e) / lambda;
  }
  return m;
}

// Integrates unit intervals [n, n+1) for n = 0, 1, ... until either the
// truncation test passes (fixed_x_max == 0) or n reaches fixed_x_max.
template <typename IntervalFn>
LaplaceIntegral integrate_unit_intervals(const StepProfile& profile, double T, double rel_tol,
                                         std::uint64_t fixed_x_max, IntervalFn&& interval,
                                         const char* who) {
  CompensatedSum<long double> total;
  std::uint64_t n = 0;
  for (;; ++n) {
    const std::uint64_t X = n;
    if (fixed_x_max != 0 ? X == fixed_x_max
                         : X > 0 && envelope_tail(T, static_cast<double>(X)) <
                                        rel_tol * static_cast<double>(total.value()))
      break;
    if (X >= profile.limit()) {
      const std::uint64_t need =
          fixed_x_max != 0 ? fixed_x_max
                           : truncation_point(T, rel_tol, static_cast<double>(total.value()));
      throw CapacityError(std::string(who) + ": T = " + std::to_string(T) + " needs sieve limit >= " +
                              std::to_string(need) + ", profile has " +
                              std::to_string(profile.limit()),
                          need);
    }
    total += interval(n);
  }
  return {T, static_cast<double>(total.value()), envelope_tail(T, static_cast<double>(n)), n, 0.0};
}

LaplaceIntegral p2_impl(const StepProfile& profile, double T, double rel_tol, std::uint64_t fixed) {
  if (profile.kind() != ErrorKind::circle) throw ArgumentError("laplace_p2: expected a circle profile");
  check_T(T, "laplace_p2");
  validate_envelope(profile);
  constexpr long double pi = kPi<long double>;
  const long double lambda = 1.0L / T;
  const auto m = exp_moments(lambda);
  // int_0^1 (v0 - pi s)^2 e^{-s/T} ds = v0^2 m0 - 2 pi v0 m1 + pi^2 m2.
  auto interval = [&](std::uint64_t n) {
    const long double v0 = static_cast<long double>(profile.partial(n)) + 1.0L - pi * n;
    return std::exp(-lambda * n) * (v0 * v0 * m[0] - 2.0L * pi * v0 * m[1] + pi * pi * m[2]);
  };
  return integrate_unit_intervals(profile, T, rel_tol, fixed, interval, "laplace_p2");
}

struct GaussRule {
  std::vector<long double> nodes;    // on [0, 1]
  std::vector<long double> weights;  // summing to 1
};

GaussRule gauss_legendre(int order) {
  GaussRule rule;
  for (int i = 1; i <= order; ++i) {
    long double x = std::cos(kPi<long double> * (i - 0.25L) / (order + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    rule.nodes.push_back((1.0L + x) / 2.0L);
    rule.weights.push_back(1.0L / ((1 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace

LaplaceIntegral laplace_p2(const StepProfile& profile, double T, double rel_tol) {
  if (!(rel_tol > 0)) throw ArgumentError("laplace_p2: rel_tol must be > 0");
  return p2_impl(profile, T, rel_tol, 0);
}

LaplaceIntegral laplace_p2_fixed(const StepProfile& profile, double T, std::uint64_t x_max) {
  if (x_max == 0) throw ArgumentError("laplace_p2_fixed: x_max must be >= 1");
  return p2_impl(profile, T, 0.0, x_max);
}

LaplaceIntegral laplace_d2(const StepProfile& profile, double T, double rel_tol) {
  if (profile.kind() != ErrorKind::divisor) throw ArgumentError("laplace_d2: expected a divisor profile");
  check_T(T, "laplace_d2");
  if (!(rel_tol > 0)) throw ArgumentError("laplace_d2: rel_tol must be > 0");
  validate_envelope(profile);
  static const GaussRule low = gauss_legendre(16);
  static const GaussRule high = gauss_legendre(32);
  const long double lambda = 1.0L / T;

  // (count - main(a + w s))^2 e^{-(a + w s)/T} over s in [0, 1], times w.
  auto piece = [&](const GaussRule& rule, long double count, long double a, long double w) {
    long double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const long double x = a + w * rule.nodes[i];
      const long double e = count - smooth_main(ErrorKind::divisor, x);
      sum += rule.weights[i] * e * e * std::exp(-lambda * x);
    }
    return w * sum;
  };

  CompensatedSum<long double> low_total;
  auto interval = [&](std::uint64_t n) -> long double {
    if (n == 0) {
      // x log x is not smooth at 0: geometric pieces [2^{-k-1}, 2^{-k}].
      long double hi_sum = 0, lo_sum = 0, top = 1.0L;
      for (int k = 0; k < 64; ++k, top /= 2) {
        hi_sum += piece(high, 0, top / 2, top / 2);
        lo_sum += piece(low, 0, top / 2, top / 2);
      }
      low_total += lo_sum;
      return hi_sum;
    }
    const auto count = static_cast<long double>(profile.partial(n));
    low_total += piece(low, count, n, 1.0L);
    return piece(high, count, n, 1.0L);
  };
  LaplaceIntegral out = integrate_unit_intervals(profile, T, rel_tol, 0, interval, "laplace_d2");
  out.quadrature_delta = std::abs(out.integral - static_cast<double>(low_total.value()));
  return out;
}

double laplace_main_p(const SeriesConstant& c_r, double T) {
  if (c_r.kind != SeriesKind::r_squared) throw ArgumentError("laplace_main_p: need an r_squared constant");
  return 0.25 * std::pow(T / kPi<double>, 1.5) * c_r.corrected() - T;
}

double laplace_main_d(const SeriesConstant& c_d, double T) {
  if (c_d.kind != SeriesKind::d_squared) throw ArgumentError("laplace_main_d: need a d_squared constant");
  return 0.125 * std::pow(T / kPi<double>, 1.5) * c_d.corrected();
}

LaplaceEstimate estimate_p(const StepProfile& profile, const SeriesConstant& c_r, double T,
                           double rel_tol) {
  const LaplaceIntegral li = laplace_p2(profile, T, rel_tol);
  const double main = laplace_main_p(c_r, T);
  return {T, li.integral, li.truncation_bound, main, li.integral - main};
}

ResidualScan residual_scan_p(const StepProfile& profile, const SeriesConstant& c_r,
                             std::span<const double> T_list, double rel_tol) {
  if (T_list.empty()) throw ArgumentError("residual_scan_p: empty T list");
  if (!std::is_sorted(T_list.begin(), T_list.end()))
    throw ArgumentError("residual_scan_p: T list must be ascending");
  ResidualScan scan;
  std::vector<double> Ts, residuals;
  for (double T : T_list) {
    const LaplaceEstimate est = estimate_p(profile, c_r, T, rel_tol);
    scan.rows.push_back({T, est.integral, est.truncation_bound, est.main_term, est.residual,
                         est.residual / std::pow(T, 2.0 / 3.0)});
    Ts.push_back(T);
    residuals.push_back(est.residual);
  }
  if (Ts.size() >= 2) scan.slope = loglog_slope(Ts, residuals);
  return scan;
}

A1Fit fit_divisor_terms(const StepProfile& profile_d, const SeriesConstant& c_d,
                        std::span<const double> T_list, double rel_tol) {
  if (T_list.size() < 3)
    throw ArgumentError("fit_a1: underdetermined fit, need >= 3 values of T, got " +
                        std::to_string(T_list.size()));
  A1Fit fit;
  for (double T : T_list) {
    const LaplaceIntegral li = laplace_d2(profile_d, T, rel_tol);
    fit.T.push_back(T);
    fit.y_over_T.push_back((li.integral - laplace_main_d(c_d, T)) / T);
  }
  fit.coefficients = fit_log_quadratic(fit.T, fit.y_over_T);
  return fit;
}

namespace {

long double weight_f_unchecked(long double t, long double h, long double T) {
  const long double root_sum = std::sqrt(t + h) + std::sqrt(t);
  const long double gap2 = h * h / (root_sum * root_sum);  // (sqrt(t+h) - sqrt t)^2
  const long double geo = std::sqrt(t * (t + h));
  const long double pi = kPi<long double>;
  const long double brace = -gap2 + (3.0L * (2.0L * t + h) + 2.0L * geo) / (16.0L * pi * pi * geo * T);
  return brace * std::pow(t, -0.75L) * std::pow(t + h, -0.75L);
}

}  // namespace

double weight_f(double t, double h, double T) {
  if (!(h >= 0) || !(t > 0) || h * h > t)
    throw DomainError("weight_f: need h >= 0, t > 0 and h^2 <= t");
  check_T(T, "weight_f");
  return static_cast<double>(weight_f_unchecked(t, h, T));
}

namespace {

// Richardson-extrapolated central difference with relative step.
template <typename F>
long double derivative(F&& f, long double t) {
  const long double step = 1e-3L * t;
  auto central = [&](long double s) { return (f(t + s) - f(t - s)) / (2 * s); };
  return (4.0L * central(step / 2) - central(step)) / 3.0L;
}

}  // namespace

double weight_u_ratio(double t, double h, double T) {
  if (!(h >= 0) || !(t > 0) || h * h > t)
    throw DomainError("weight_u_ratio: need h >= 0, t > 0 and h^2 <= t");
  check_T(T, "weight_u_ratio");
  const long double pi = kPi<long double>;
  auto exponent = [&](long double s) {
    const long double root_sum = std::sqrt(s + h) + std::sqrt(s);
    return pi * pi * T * h * h / (root_sum * root_sum);
  };
  auto f = [&](long double s) { return weight_f_unchecked(s, h, T); };
  // u = e^{-E} (f' - E' f).
  const long double df = derivative(f, t);
  const long double dE = derivative(exponent, t);
  const long double inner = df - dE * f(t);
  const long double tl = t, hl = h;
  const long double env = hl * hl * std::pow(tl, -3.5L) + std::pow(tl, -2.5L) / T +
                          T * hl * hl * hl * hl * std::pow(tl, -4.5L);
  const long double log_scale = -exponent(t) + 2.0L * T * hl * hl / tl;
  return static_cast<double>(std::exp(log_scale) * std::abs(inner) / env);
}

double elementary_gap(double x, double alpha) {
  if (!(x >= 0) || !(alpha > 0)) throw DomainError("elementary_gap: need x >= 0, alpha > 0");
  return std::exp(-alpha) * std::pow(alpha, alpha) - std::exp(-x) * std::pow(x, alpha);
}

}  // namespace gcircle
