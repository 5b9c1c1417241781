// numeric.hpp
//
// Small numeric building blocks templated on the scalar type.

#pragma once

#include <cmath>
#include <numbers>

namespace gcircle {

template <typename Scalar>
inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

// Euler's constant to 40 digits; long double keeps ~19 of them.
inline constexpr long double kEulerGamma = 0.5772156649015328606065120900824024310422L;

// Neumaier's variant of Kahan summation: the running error is tracked even
// when the incoming term is larger than the accumulated sum.
template <typename Scalar>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(Scalar x) noexcept {
    const Scalar t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }

  Scalar value() const noexcept { return sum_ + carry_; }

 private:
  Scalar sum_{0};
  Scalar carry_{0};
};

}  // namespace gcircle
