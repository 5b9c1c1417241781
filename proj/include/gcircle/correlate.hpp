// correlate.hpp
//
// Correlation sums sum_{n<=N} r(n) r(n+h) and their error term
//     E(N, h) = sum_{n<=N} r(n) r(n+h) - g(h) N,
// kept exact (integer raw sum, rational main term) until report time.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gcircle/arith.hpp"
#include "gcircle/rational.hpp"

namespace gcircle {

struct CorrelationRecord {
  std::uint64_t N = 0;
  std::uint64_t h = 0;
  std::uint64_t raw = 0;
  Rational main;
  double e_value = 0;

  Rational e_exact() const;
  friend bool operator==(const CorrelationRecord&, const CorrelationRecord&) = default;
};

// Exact sum_{n<=N} r(n) r(n+h); needs h >= 1 and N + h <= tables.limit().
std::uint64_t corr_sum(const ArithTables& tables, std::uint64_t N, std::uint64_t h);

// Record with main = g_closed(h) * N.
CorrelationRecord e_term(const ArithTables& tables, std::uint64_t N, std::uint64_t h);

// Records for every N in N_list (in the given order) and 1 <= h <= H_max, in
// one pass over n <= max(N_list) with an accumulator per shift.
std::vector<CorrelationRecord> corr_grid(const ArithTables& tables,
                                         std::span<const std::uint64_t> N_list,
                                         std::uint64_t H_max);

struct PointwiseBoundRow {
  std::uint64_t N;
  std::uint64_t h;
  double e_value;
  double ratio;  // |E(N,h)| / (N^{2/3} h^{5/42})
};

struct PointwiseBoundReport {
  std::vector<PointwiseBoundRow> rows;
  double max_ratio = 0;
  std::uint64_t argmax_N = 0;
  std::uint64_t argmax_h = 0;
};

PointwiseBoundReport pointwise_bound_report(std::span<const CorrelationRecord> records);

struct WeightedBoundRow {
  std::uint64_t trial;
  double weighted_abs;  // |sum_m alpha_m E(N, m)|
  double norm;          // ||alpha||_2
  double envelope;      // ||alpha||_2 (N^{2/3} M^{1/2} + N^{1/3} M^{5/6})
  double ratio;
};

// One weighted sum over a dyadic block. `records` must share N and cover
// exactly M < h <= 2M for some M >= 1; alpha[i] pairs with the record of
// shift M + 1 + i.
WeightedBoundRow weighted_bound(std::span<const CorrelationRecord> records,
                                std::span<const std::complex<double>> alpha,
                                std::uint64_t trial = 0);

// `trials` draws of alpha uniform in the complex unit disc, scaled to unit
// norm. Deterministic for a given seed.
std::vector<WeightedBoundRow> weighted_bound_report(std::span<const CorrelationRecord> records,
                                                    std::uint64_t trials, std::uint64_t seed);

}  // namespace gcircle
