#include "gcircle/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "gcircle/error.hpp"
#include "gcircle/numeric.hpp"

namespace gcircle {

Rational CorrelationRecord::e_exact() const {
  return Rational(static_cast<std::int64_t>(raw)) - main;
}

namespace {

void check_span(const ArithTables& tables, std::uint64_t N, std::uint64_t h, const char* who) {
  if (h == 0) throw ArgumentError(std::string(who) + ": h must be >= 1");
  if (N + h > tables.limit())
    throw DomainError(std::string(who) + ": N + h = " + std::to_string(N + h) +
                      " exceeds table limit " + std::to_string(tables.limit()));
}

CorrelationRecord make_record(std::uint64_t N, std::uint64_t h, std::uint64_t raw) {
  CorrelationRecord rec{N, h, raw, g_closed(h) * Rational(static_cast<std::int64_t>(N)), 0.0};
  rec.e_value = rec.e_exact().to_double();
  return rec;
}

}  // namespace

std::uint64_t corr_sum(const ArithTables& tables, std::uint64_t N, std::uint64_t h) {
  check_span(tables, N, h, "corr_sum");
  std::uint64_t sum = 0;
  for (std::uint64_t n = 1; n <= N; ++n)
    sum += static_cast<std::uint64_t>(tables.r(n)) * tables.r(n + h);
  return sum;
}

CorrelationRecord e_term(const ArithTables& tables, std::uint64_t N, std::uint64_t h) {
  return make_record(N, h, corr_sum(tables, N, h));
}

std::vector<CorrelationRecord> corr_grid(const ArithTables& tables,
                                         std::span<const std::uint64_t> N_list,
                                         std::uint64_t H_max) {
  std::vector<CorrelationRecord> out;
  if (N_list.empty() || H_max == 0) return out;
  const std::uint64_t N_top = *std::max_element(N_list.begin(), N_list.end());
  check_span(tables, N_top, H_max, "corr_grid");

  std::vector<std::size_t> order(N_list.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return N_list[a] < N_list[b]; });

  // snapshots[i][h-1] holds the sum for N_list[i].
  std::vector<std::vector<std::uint64_t>> snapshots(N_list.size());
  std::vector<std::uint64_t> acc(H_max + 1, 0);
  const auto r = tables.r_values();
  std::size_t next = 0;
  auto flush = [&](std::uint64_t n) {
    while (next < order.size() && N_list[order[next]] == n) {
      snapshots[order[next]].assign(acc.begin() + 1, acc.end());
      ++next;
    }
  };
  flush(0);
  for (std::uint64_t n = 1; n <= N_top; ++n) {
    const std::uint64_t rn = r[n];
    if (rn != 0) {
      const std::uint16_t* ahead = r.data() + n;
      for (std::uint64_t h = 1; h <= H_max; ++h) acc[h] += rn * ahead[h];
    }
    flush(n);
  }

  out.reserve(N_list.size() * H_max);
  for (std::size_t i = 0; i < N_list.size(); ++i)
    for (std::uint64_t h = 1; h <= H_max; ++h) out.push_back(make_record(N_list[i], h, snapshots[i][h - 1]));
  return out;
}

PointwiseBoundReport pointwise_bound_report(std::span<const CorrelationRecord> records) {
  if (records.empty()) throw ArgumentError("pointwise_bound_report: no records");
  PointwiseBoundReport report;
  report.rows.reserve(records.size());
  for (const auto& rec : records) {
    if (rec.N == 0 || rec.h > rec.N)
      throw ArgumentError("pointwise_bound_report: need 1 <= h <= N (N = " + std::to_string(rec.N) +
                          ", h = " + std::to_string(rec.h) + ")");
    const double scale = std::pow(static_cast<double>(rec.N), 2.0 / 3.0) *
                         std::pow(static_cast<double>(rec.h), 5.0 / 42.0);
    const double ratio = std::abs(rec.e_value) / scale;
    report.rows.push_back({rec.N, rec.h, rec.e_value, ratio});
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax_N = rec.N;
      report.argmax_h = rec.h;
    }
  }
  return report;
}

namespace {

struct DyadicBlock {
  std::uint64_t N;
  std::uint64_t M;
  std::vector<double> e_by_shift;  // index i <-> h = M + 1 + i
};

DyadicBlock dyadic_block(std::span<const CorrelationRecord> records) {
  if (records.empty()) throw ArgumentError("weighted_bound: no records");
  std::vector<const CorrelationRecord*> sorted;
  for (const auto& rec : records) sorted.push_back(&rec);
  std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return a->h < b->h; });
  DyadicBlock block{sorted.front()->N, sorted.front()->h - 1, {}};
  if (block.M == 0 || sorted.back()->h != 2 * block.M || sorted.size() != block.M)
    throw ArgumentError("weighted_bound: records must cover exactly M < h <= 2M with M >= 1");
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i]->N != block.N) throw ArgumentError("weighted_bound: records must share N");
    if (sorted[i]->h != block.M + 1 + i) throw ArgumentError("weighted_bound: duplicate or missing shift");
    block.e_by_shift.push_back(sorted[i]->e_value);
  }
  return block;
}

WeightedBoundRow weighted_row(const DyadicBlock& block, std::span<const std::complex<double>> alpha,
                              std::uint64_t trial) {
  if (alpha.size() != block.e_by_shift.size())
    throw ArgumentError("weighted_bound: coefficient count does not match the block size");
  CompensatedSum<double> re, im, norm2;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    re += alpha[i].real() * block.e_by_shift[i];
    im += alpha[i].imag() * block.e_by_shift[i];
    norm2 += std::norm(alpha[i]);
  }
  const double N = static_cast<double>(block.N), M = static_cast<double>(block.M);
  const double norm = std::sqrt(norm2.value());
  const double envelope =
      norm * (std::pow(N, 2.0 / 3.0) * std::sqrt(M) + std::pow(N, 1.0 / 3.0) * std::pow(M, 5.0 / 6.0));
  const double weighted = std::hypot(re.value(), im.value());
  return {trial, weighted, norm, envelope, weighted / envelope};
}

// 53 random mantissa bits; unlike std::uniform_real_distribution this is
// the same on every standard library.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

WeightedBoundRow weighted_bound(std::span<const CorrelationRecord> records,
                                std::span<const std::complex<double>> alpha, std::uint64_t trial) {
  return weighted_row(dyadic_block(records), alpha, trial);
}

std::vector<WeightedBoundRow> weighted_bound_report(std::span<const CorrelationRecord> records,
                                                    std::uint64_t trials, std::uint64_t seed) {
  const DyadicBlock block = dyadic_block(records);
  std::mt19937_64 rng(seed);
  std::vector<WeightedBoundRow> rows;
  std::vector<std::complex<double>> alpha(block.M);
  for (std::uint64_t t = 0; t < trials; ++t) {
    double norm2 = 0;
    for (auto& a : alpha) {
      const double radius = std::sqrt(unit_uniform(rng));
      const double angle = 2.0 * kPi<double> * unit_uniform(rng);
      a = std::polar(radius, angle);
      norm2 += std::norm(a);
    }
    const double scale = norm2 > 0 ? 1.0 / std::sqrt(norm2) : 0.0;
    for (auto& a : alpha) a *= scale;
    rows.push_back(weighted_row(block, alpha, t));
  }
  return rows;
}

}  // namespace gcircle
