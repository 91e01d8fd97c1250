#include "lindelof/zetafn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "lindelof/chifn.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/gammafn.hpp"

namespace lindelof {
namespace {

constexpr double kPoleGuard = 1e-8;
constexpr double kMaxTauEm = 2e4;
constexpr double kMaxTauEta = 1e3;
constexpr double kMaxTauHurwitz = 1e3;
constexpr int kMaxGrowthSteps = 8;

// B_{2j} / (2j)! for j = 1..31.
constexpr std::array<double, 31> kBernoulliOverFactorial{
    0.083333333333333333333,   -0.0013888888888888888889,  0.000033068783068783068783,
    -8.2671957671957671958e-7, 2.0876756987868098979e-8,   -5.2841901386874931848e-10,
    1.3382536530684678833e-11, -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.174868698558061873e-16, 5.5090028283602295152e-18,  -1.3954464685812523341e-19,
    3.5347070396294674717e-21, -8.9535174270375468504e-23, 2.2679524523376830603e-24,
    -5.7447906688722024453e-26, 1.4551724756148649019e-27, -3.6859949406653101782e-29,
    9.336734257095044672e-31,  -2.3650224157006299346e-32, 5.9906717624821343047e-34,
    -1.5174548844682902617e-35, 3.8437581254541882322e-37, -9.7363530726466910353e-39,
    2.4662470442006809571e-40, -6.2470767418207436931e-42, 1.5824030244644914298e-43,
    -4.0082736859489359685e-45, 1.0153075855569556312e-46, -2.5718041582418717499e-48,
    6.5144560352338149316e-50};

constexpr std::size_t kLogTableSize = 1u << 18;

// log(n) for n < kLogTableSize; the zeta direct sum reads it instead of calling log.
const std::vector<double>& log_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogTableSize);
    t[0] = 0.0;
    for (std::size_t n = 1; n < kLogTableSize; ++n) t[n] = std::log(static_cast<double>(n));
    return t;
  }();
  return table;
}

struct KahanSum {
  Complex sum{};
  Complex carry{};
  void add(Complex v) {
    const Complex y = v - carry;
    const Complex t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

struct EmParts {
  Complex value;
  double truncation;
  double rounding;
};

// sum_{n<M} (n+a)^(-s) + Euler-Maclaurin tail at x = M + a.
EmParts euler_maclaurin(Complex s, double a, std::size_t M, int K) {
  const double sigma = s.real();
  const double tau = s.imag();
  KahanSum sum;
  double sum_abs = 0.0;
  double sum_abs2 = 0.0;
  if (a == 1.0 && M + 1 < kLogTableSize) {
    const auto& logs = log_table();
    for (std::size_t n = 1; n <= M; ++n) {
      const double l = logs[n];
      // pow keeps real arguments correctly rounded; exp(-sigma l) amplifies the
      // rounding of l by sigma.
      const double mag = tau == 0.0 ? std::pow(static_cast<double>(n), -sigma) : std::exp(-sigma * l);
      const double ph = tau * l;
      sum.add({mag * std::cos(ph), -mag * std::sin(ph)});
      sum_abs += mag;
      sum_abs2 += mag * mag;
    }
  } else {
    for (std::size_t n = 0; n < M; ++n) {
      const double l = std::log(static_cast<double>(n) + a);
      const double mag = tau == 0.0 ? std::pow(static_cast<double>(n) + a, -sigma) : std::exp(-sigma * l);
      const double ph = tau * l;
      sum.add({mag * std::cos(ph), -mag * std::sin(ph)});
      sum_abs += mag;
      sum_abs2 += mag * mag;
    }
  }

  const double x = static_cast<double>(M) + a;
  const double lx = std::log(x);
  const Complex xs = tau == 0.0 ? Complex(std::pow(x, -sigma)) : std::exp(-s * lx);
  Complex tail = x * xs / (s - 1.0) + 0.5 * xs;

  Complex rising = s;
  Complex power = xs / x;
  for (int j = 1; j <= K; ++j) {
    tail += kBernoulliOverFactorial[j - 1] * rising * power;
    const double m = 2.0 * j;
    rising *= (s + (m - 1.0)) * (s + m);
    power /= x * x;
  }
  const double next = std::abs(kBernoulliOverFactorial[K] * rising * power);
  const double denom = sigma + 2.0 * K + 1.0;
  const double factor = denom > 0.0 ? std::abs(s + (2.0 * K + 1.0)) / denom : 1e3;
  const double truncation = next * factor;

  const double rounding = 4.0 * kEps * (sum_abs + std::abs(tail)) +
                          kEps * std::abs(tau) * lx * std::sqrt(sum_abs2);
  return {(tail - sum.carry) + sum.sum, truncation, rounding};
}

void check_pole(Complex s, const char* where) {
  if (std::abs(s - 1.0) <= kPoleGuard) {
    std::ostringstream msg;
    msg << where << ": pole at s = 1";
    throw PoleError(msg.str());
  }
}

Evaluation em_adaptive(Complex s, double a, const ZetaConfig& cfg) {
  const double base = std::ceil(cfg.em_terms_factor * std::abs(s.imag()));
  std::size_t N = static_cast<std::size_t>(std::max(20.0, base));
  EmParts parts{};
  for (int step = 0; step <= kMaxGrowthSteps; ++step) {
    // For a = 1 the sum starts at n = 1 and the tail sits at N, matching
    // sum_{n<N} n^(-s) + N^(1-s)/(s-1) + N^(-s)/2 + ...
    const std::size_t M = a == 1.0 ? N - 1 : N;
    parts = euler_maclaurin(s, a, M, cfg.bernoulli_terms);
    if (parts.truncation <= cfg.target_abs_err) break;
    N = N + N / 2;
  }
  return {parts.value, parts.truncation + parts.rounding};
}

}  // namespace

void ZetaConfig::validate() const {
  if (!(em_terms_factor > 0.0) || !std::isfinite(em_terms_factor)) {
    throw DomainError("ZetaConfig: em_terms_factor must be positive");
  }
  if (bernoulli_terms < 2 || bernoulli_terms > 30) {
    throw DomainError("ZetaConfig: bernoulli_terms must lie in [2, 30]");
  }
  if (!(target_abs_err >= 1e-13)) {
    throw DomainError("ZetaConfig: target_abs_err must be >= 1e-13");
  }
}

Evaluation zeta_em(Complex s, const ZetaConfig& cfg) {
  cfg.validate();
  check_pole(s, "zeta_em");
  if (!(s.real() >= -1.0)) throw DomainError("zeta_em requires sigma >= -1");
  if (!(std::abs(s.imag()) <= kMaxTauEm)) {
    throw RangeError("zeta_em supports |tau| <= 2e4");
  }
  return em_adaptive(s, 1.0, cfg);
}

Evaluation zeta_eta(Complex s) {
  check_pole(s, "zeta_eta");
  if (!(s.real() > 0.0)) throw DomainError("zeta_eta requires sigma > 0");
  if (!(std::abs(s.imag()) <= kMaxTauEta)) {
    throw RangeError("zeta_eta supports |tau| <= 1e3");
  }
  const Complex denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  if (std::abs(denom) < 1e-10) {
    throw DomainError("zeta_eta: 1 - 2^(1-s) vanishes at this s");
  }

  // |error| <= 2 / ((3 + sqrt 8)^n |Gamma(s)| |1 - 2^(1-s)|)
  const double log_rate = std::log(3.0 + std::sqrt(8.0));
  const double log_gamma_abs = log_gamma(s).value.real();
  const double log_scale = std::log(2.0) - log_gamma_abs - std::log(std::abs(denom));
  const double wanted = std::ceil((log_scale + 16.0 * std::log(10.0)) / log_rate) + 10.0;
  const int n = static_cast<int>(std::clamp(wanted, 30.0, 4000.0));

  // Normalised Chebyshev weights w_k = (d_n - d_k) / d_n, built in log space.
  std::vector<double> log_c(n + 1);
  log_c[0] = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double num = 4.0 * (n + i - 1.0) * (n - i + 1.0);
    const double den = (2.0 * i) * (2.0 * i - 1.0);
    log_c[i] = log_c[i - 1] + std::log(num / den);
  }
  const double peak = *std::max_element(log_c.begin(), log_c.end());
  std::vector<double> suffix(n + 1, 0.0);
  double acc = 0.0;
  for (int i = n; i >= 0; --i) {
    suffix[i] = acc;  // sum_{j > i} c_j
    acc += std::exp(log_c[i] - peak);
  }
  const double total = acc;

  KahanSum eta;
  double abs_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double w = suffix[k] / total;
    const double l = std::log(k + 1.0);
    const double mag = w * std::exp(-s.real() * l);
    const double ph = s.imag() * l;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    eta.add(sign * Complex(mag * std::cos(ph), -mag * std::sin(ph)));
    abs_sum += mag;
  }
  const Complex value = eta.sum / denom;
  const double truncation = std::exp(log_scale - n * log_rate);
  const double rounding = kEps * abs_sum * (8.0 + std::abs(s.imag()) * std::log(n + 1.0)) /
                          std::abs(denom);
  return {value, truncation + rounding + 4.0 * kEps * std::abs(value)};
}

Evaluation zeta(Complex s, const ZetaConfig& cfg) {
  check_pole(s, "zeta");
  if (s.real() >= 0.5 || std::abs(s) <= 0.25) {
    return zeta_em(s, cfg);
  }
  const Evaluation factor = chi(s);
  if (factor.value == 0.0) {
    return {0.0, factor.abs_err};
  }
  const Evaluation mirror = zeta_em(1.0 - s, cfg);
  return {factor.value * mirror.value,
          std::abs(factor.value) * mirror.abs_err + std::abs(mirror.value) * factor.abs_err};
}

Evaluation hurwitz_zeta(Complex s, double a, const ZetaConfig& cfg) {
  cfg.validate();
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta requires a in (0, 1]");
  check_pole(s, "hurwitz_zeta");
  if (!(s.real() > -1.0)) throw DomainError("hurwitz_zeta requires sigma > -1");
  if (!(std::abs(s.imag()) <= kMaxTauHurwitz)) {
    throw RangeError("hurwitz_zeta supports |tau| <= 1e3");
  }
  return em_adaptive(s, a, cfg);
}

}  // namespace lindelof
