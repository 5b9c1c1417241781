// arith.hpp
//
// Sieved arithmetic functions r(n), d(n), sigma(n) and the main-term
// coefficient g(h) of the correlation sum sum_{n<=x} r(n) r(n+h).
//
// r(n) is built from r(n) = 4 * sum_{d|n} chi(d), chi the non-principal
// character mod 4. Storage per entry: r and d as uint16, sigma as uint32,
// 8 bytes in total (N = 10^8 needs ~800 MB).

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcircle/rational.hpp"

namespace gcircle {

// Immutable after construction; safe to share across threads.
class ArithTables {
 public:
  // Largest supported limit. Below it d(n) <= 1344, so 4 d(n) fits uint16,
  // and sigma(n) < 6n fits uint32.
  static constexpr std::uint64_t kMaxLimit = 700'000'000;
  static constexpr std::uint64_t kBytesPerEntry = 8;

  // Throws ArgumentError if limit == 0, CapacityError if limit > kMaxLimit
  // or the arrays cannot be allocated.
  explicit ArithTables(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  // 1 <= n <= limit(); unchecked.
  std::uint32_t r(std::uint64_t n) const noexcept { return r_[n]; }
  std::uint32_t d(std::uint64_t n) const noexcept { return d_[n]; }
  std::uint32_t sigma(std::uint64_t n) const noexcept { return sigma_[n]; }

  // Index 0 holds 0; entries 1..limit() are the function values.
  std::span<const std::uint16_t> r_values() const noexcept { return r_; }
  std::span<const std::uint16_t> d_values() const noexcept { return d_; }
  std::span<const std::uint32_t> sigma_values() const noexcept { return sigma_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint16_t> r_;
  std::vector<std::uint16_t> d_;
  std::vector<std::uint32_t> sigma_;
};

inline ArithTables build_tables(std::uint64_t limit) { return ArithTables(limit); }

// chi(n) for the non-principal character mod 4: 0, +1, -1.
constexpr int chi(std::uint64_t n) noexcept {
  if ((n & 1u) == 0) return 0;
  return (n & 3u) == 1 ? 1 : -1;
}

// 2-adic valuation; h >= 1.
constexpr unsigned v2(std::uint64_t h) noexcept {
  unsigned k = 0;
  while ((h & 1u) == 0) {
    h >>= 1;
    ++k;
  }
  return k;
}

// r(n) by trial-division factorization, for spot checks beyond a table.
std::uint64_t r_single(std::uint64_t n);
// sigma(n) by trial division.
std::uint64_t sigma_single(std::uint64_t n);

// g(h) = (8/h) |2^{k+1} - 3| sigma(h / 2^k), 2^k || h.
Rational g_closed(std::uint64_t h);
// g(h) = ((-1)^h 8 / h) sum_{d|h} (-1)^d d, by divisor enumeration.
Rational g_direct(std::uint64_t h);

}  // namespace gcircle
