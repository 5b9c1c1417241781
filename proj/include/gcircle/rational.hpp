// rational.hpp
//
// Exact rational numbers over 64-bit integers, always in lowest terms with a
// positive denominator. Arithmetic throws std::overflow_error instead of
// wrapping; intermediate products go through __int128.

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace gcircle {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  double to_double() const noexcept;
  long double to_long_double() const noexcept;

  // "p/q", or "p" when q == 1.
  std::string to_string() const;
  // Inverse of to_string(); throws ArgumentError on malformed input.
  static Rational parse(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace gcircle
