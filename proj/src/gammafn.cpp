#include "lindelof/gammafn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "lindelof/errors.hpp"

namespace lindelof {
namespace {

constexpr double kPoleTolerance = 1e-12;
// Stirling directly beyond kStirlingRadius, Lanczos inside kLanczosRadius and
// the recurrence shifted into the Stirling region in between.
constexpr double kStirlingRadius = 10.0;
constexpr double kLanczosRadius = 3.0;
constexpr double kLnSqrt2Pi = 0.91893853320467274178;
constexpr double kLnPi = 1.14472988584940017414;
constexpr double kLn2 = 0.69314718055994530942;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k (2k - 1)) for k = 1..11; the last entry is only used for the
// truncation estimate.
constexpr std::array<double, 11> kStirlingCoeff{
    1.0 / 12.0,         -1.0 / 360.0,         1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0,    1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0, 77683.0 / 5796.0};
constexpr int kStirlingTerms = 10;

void check_pole(Complex s) {
  const double n = std::round(s.real());
  if (n <= 0.0 && std::abs(s - Complex(n, 0.0)) < kPoleTolerance) {
    std::ostringstream msg;
    msg << "Gamma has a pole at s = " << n;
    throw PoleError(msg.str());
  }
}

Evaluation stirling(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (int k = 0; k < kStirlingTerms; ++k) {
    series += kStirlingCoeff[k] * power;
    power *= inv2;
  }
  const Complex value = (z - 0.5) * std::log(z) - z + kLnSqrt2Pi + series;
  // The remainder is bounded by the first omitted term times sec^(2K+1)(arg z / 2),
  // which is at most 2^(K+1/2) in the right half plane; Re z >= 1/2 keeps it
  // far smaller in practice.
  const double tail = std::abs(kStirlingCoeff[kStirlingTerms] * power) * 4.0;
  return {value, tail};
}

Evaluation lanczos(Complex s) {
  const Complex z = s - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    series += kLanczos[k] / (z + static_cast<double>(k));
  }
  const Complex t = z + kLanczosG + 0.5;
  const Complex lead = (z + 0.5) * std::log(t);
  const Complex value = kLnSqrt2Pi + lead - t + std::log(series);
  return {value, 2e-15 + 8.0 * kEps * (std::abs(lead) + std::abs(t))};
}

// log Gamma(s) = log Gamma(s + n) - log prod_{k<n} (s + k). The product's
// modulus goes through one log and its argument is the sum of the factors'
// arguments, which keeps the branch continuous.
Evaluation shifted_stirling(Complex s) {
  int n = 0;
  double modulus = 1.0;
  double arg = 0.0;
  Complex z = s;
  while (std::abs(z) <= kStirlingRadius) {
    modulus *= std::abs(z);
    arg += std::arg(z);
    z += 1.0;
    ++n;
  }
  const Evaluation far = stirling(z);
  const Complex value = far.value - Complex(std::log(modulus), arg);
  return {value, far.abs_err + 2.0 * n * kEps * (1.0 + std::abs(arg))};
}

Evaluation log_gamma_right(Complex s) {
  const double r = std::abs(s);
  if (r > kStirlingRadius) return stirling(s);
  return r <= kLanczosRadius ? lanczos(s) : shifted_stirling(s);
}

}  // namespace

Complex expm1(Complex u) {
  const double a = u.real();
  const double b = u.imag();
  const double half_sin = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin, std::exp(a) * std::sin(b)};
}

Complex log_sin_pi(Complex z) {
  const double m = std::round(z.real());
  const Complex r(z.real() - m, z.imag());
  const Complex i_pi(0.0, kPi);
  if (z.imag() >= 0.0) {
    // sin(pi r) = (i/2) e^(-i pi r) (1 - e^(2 i pi r))
    const Complex w = -expm1(2.0 * i_pi * r);
    return -kLn2 + 0.5 * i_pi - i_pi * r + std::log(w) - i_pi * m;
  }
  const Complex w = -expm1(-2.0 * i_pi * r);
  return -kLn2 - 0.5 * i_pi + i_pi * r + std::log(w) + i_pi * m;
}

double log_sinh(double x) { return x - kLn2 + std::log(-std::expm1(-2.0 * x)); }

Evaluation log_gamma(Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  check_pole(s);
  Evaluation result;
  if (s.real() >= 0.5) {
    result = log_gamma_right(s);
  } else {
    const Complex log_sin = log_sin_pi(s);
    const Evaluation mirror = log_gamma_right(1.0 - s);
    result.value = kLnPi - log_sin - mirror.value;
    result.abs_err = mirror.abs_err + 4.0 * kEps * std::abs(log_sin);
  }
  result.abs_err += 1e-15 + 8.0 * kEps * std::abs(result.value);
  return result;
}

Evaluation gamma(Complex s) {
  const Evaluation lg = log_gamma(s);
  if (lg.value.real() > std::log(std::numeric_limits<double>::max())) {
    std::ostringstream msg;
    msg << "Gamma overflows double range (Re log Gamma = " << lg.value.real() << ")";
    throw OverflowError(msg.str());
  }
  const Complex value = std::exp(lg.value);
  return {value, std::abs(value) * lg.abs_err + 1e-300};
}

double abs_gamma_imag_axis(double t) {
  if (!(t > 0.0)) {
    throw DomainError("abs_gamma_imag_axis requires t > 0");
  }
  return std::exp(0.5 * (kLnPi - std::log(t) - log_sinh(kPi * t)));
}

double stirling_abs_bound(Complex s) {
  const double dist = std::abs(1.0 - s);
  if (dist == 0.0) {
    throw DomainError("stirling_abs_bound is undefined at s = 1");
  }
  const double log_bound = kLnSqrt2Pi + (0.5 - s.real()) * std::log(dist) -
                           0.5 * kPi * std::abs(s.imag()) + 1.0 / (6.0 * dist);
  return std::exp(log_bound);
}

}  // namespace lindelof
