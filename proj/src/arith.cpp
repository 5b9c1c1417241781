#include "gcircle/arith.hpp"

#include <limits>
#include <new>
#include <string>

#include "gcircle/error.hpp"

namespace gcircle {

ArithTables::ArithTables(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw ArgumentError("build_tables: limit must be >= 1");
  if (limit > kMaxLimit)
    throw CapacityError("build_tables: limit " + std::to_string(limit) +
                            " exceeds supported maximum " + std::to_string(kMaxLimit),
                        kMaxLimit);
  try {
    r_.assign(limit + 1, 0);
    d_.assign(limit + 1, 0);
    sigma_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw CapacityError("build_tables: cannot allocate " +
                            std::to_string((limit + 1) * kBytesPerEntry) +
                            " bytes for limit " + std::to_string(limit),
                        limit);
  }

  // Partial sums over divisors of 4 chi(d) can dip below zero; the uint16
  // arithmetic wraps mod 2^16 and the final value is in range.
  for (std::uint64_t d = 1; d <= limit; d += 2) {
    const auto step = static_cast<std::uint16_t>(chi(d) > 0 ? 4u : 65532u);
    for (std::uint64_t m = d; m <= limit; m += d) r_[m] = static_cast<std::uint16_t>(r_[m] + step);
  }

  for (std::uint64_t d = 1; d <= limit; ++d) {
    const auto dv = static_cast<std::uint32_t>(d);
    for (std::uint64_t m = d; m <= limit; m += d) {
      ++d_[m];
      if (sigma_[m] > std::numeric_limits<std::uint32_t>::max() - dv)
        throw CapacityError("build_tables: sigma overflows uint32 at n = " + std::to_string(m),
                            m - 1);
      sigma_[m] += dv;
    }
  }
}

std::uint64_t r_single(std::uint64_t n) {
  if (n == 0) throw ArgumentError("r_single: n must be >= 1");
  while ((n & 1u) == 0) n >>= 1;
  std::uint64_t result = 4;
  for (std::uint64_t p = 3; p <= n / p; p += 2) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if ((p & 3u) == 1)
      result *= e + 1;
    else if (e & 1u)
      return 0;
  }
  if (n > 1) {
    if ((n & 3u) == 3) return 0;
    result *= 2;
  }
  return result;
}

std::uint64_t sigma_single(std::uint64_t n) {
  if (n == 0) throw ArgumentError("sigma_single: n must be >= 1");
  std::uint64_t result = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    std::uint64_t term = 1, power = 1;
    while (n % p == 0) {
      n /= p;
      power *= p;
      term += power;
    }
    result *= term;
  }
  if (n > 1) result *= n + 1;
  return result;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("g(h): numerator overflow");
  return out;
}

}  // namespace

Rational g_closed(std::uint64_t h) {
  if (h == 0) throw ArgumentError("g_closed: h must be >= 1");
  const unsigned k = v2(h);
  if (k >= 62) throw std::overflow_error("g_closed: 2^(k+1) overflows");
  const std::int64_t two_k1 = std::int64_t{1} << (k + 1);
  const std::int64_t factor = two_k1 >= 3 ? two_k1 - 3 : 3 - two_k1;
  const auto sigma_odd = static_cast<std::int64_t>(sigma_single(h >> k));
  return Rational(checked_mul(checked_mul(8, factor), sigma_odd), static_cast<std::int64_t>(h));
}

Rational g_direct(std::uint64_t h) {
  if (h == 0) throw ArgumentError("g_direct: h must be >= 1");
  std::int64_t sum = 0;
  auto add = [&](std::uint64_t d) {
    const auto v = static_cast<std::int64_t>(d);
    sum += (d & 1u) ? -v : v;
  };
  for (std::uint64_t d = 1; d <= h / d; ++d) {
    if (h % d != 0) continue;
    add(d);
    if (d != h / d) add(h / d);
  }
  const std::int64_t sign = (h & 1u) ? -1 : 1;
  return Rational(checked_mul(sign * 8, sum), static_cast<std::int64_t>(h));
}

}  // namespace gcircle
