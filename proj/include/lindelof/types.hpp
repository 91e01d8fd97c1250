#pragma once

#include <complex>
#include <numbers>

namespace lindelof {

/// s = sigma + i tau.
using Complex = std::complex<double>;

/// A value together with an upper estimate of its absolute error.
struct Evaluation {
  Complex value{};
  double abs_err = 0.0;
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEps = 2.220446049250313e-16;

}  // namespace lindelof
