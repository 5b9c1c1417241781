#include "gcircle/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "gcircle/error.hpp"

namespace gcircle {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_int64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw ArgumentError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits_int64(num) || !fits_int64(den))
    throw std::overflow_error("Rational: result exceeds 64-bit range");
  Rational q;
  q.num_ = static_cast<std::int64_t>(num);
  q.den_ = static_cast<std::int64_t>(den);
  return q;
}

double Rational::to_double() const noexcept {
  return static_cast<double>(to_long_double());
}

long double Rational::to_long_double() const noexcept {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw ArgumentError("Rational: malformed \"" + text + "\"");
    return v;
  };
  std::string_view view(text);
  if (slash == std::string::npos) return Rational(parse_int(view));
  return Rational(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a) {
  return Rational::from_wide(-static_cast<__int128>(a.num_), a.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace gcircle
