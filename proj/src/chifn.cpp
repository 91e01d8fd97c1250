#include "lindelof/chifn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "lindelof/errors.hpp"
#include "lindelof/gammafn.hpp"
#include "lindelof/zetafn.hpp"

namespace lindelof {
namespace {

constexpr double kIntegerTolerance = 1e-12;
const double kLogTwoPi = std::log(kTwoPi);
const double kLogPi = std::log(kPi);

struct LogChi {
  Complex value;
  double rel_err;
};

LogChi log_chi_with_error(Complex s, bool allow_removable) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("chi: non-finite argument");
  }
  const double n = std::round(s.real());
  if (n >= 1.0 && std::abs(s - Complex(n, 0.0)) < kIntegerTolerance) {
    const long m = static_cast<long>(n);
    if (m % 2 == 1) {
      std::ostringstream msg;
      msg << "chi has a pole at s = " << m;
      throw PoleError(msg.str());
    }
    if (!allow_removable) {
      std::ostringstream msg;
      msg << "chi at s = " << m << " is 0 * infinity; limits disabled";
      throw IndeterminateError(msg.str());
    }
    // chi(2j) = (-1)^j (2pi)^(2j) / (2 (2j-1)!)
    const long j = m / 2;
    const double log_abs = n * kLogTwoPi - std::log(2.0) - std::lgamma(n);
    return {Complex(log_abs, j % 2 == 1 ? kPi : 0.0), 4.0 * kEps * (1.0 + n)};
  }

  const Complex log_sin = log_sin_pi(0.5 * s);
  if (std::isinf(log_sin.real())) {
    return {Complex(-std::numeric_limits<double>::infinity(), 0.0), 0.0};
  }
  const Evaluation lg = log_gamma(1.0 - s);
  const Complex value = -kLogPi + s * kLogTwoPi + log_sin + lg.value;
  const double rel_err =
      lg.abs_err + 8.0 * kEps * (std::abs(s) * kLogTwoPi + std::abs(log_sin) + 2.0);
  return {value, rel_err};
}

Evaluation exp_evaluation(const LogChi& lc) {
  if (std::isinf(lc.value.real()) && lc.value.real() < 0.0) {
    return {0.0, 0.0};
  }
  if (lc.value.real() > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("chi overflows double range");
  }
  const Complex value = std::exp(lc.value);
  return {value, std::abs(value) * lc.rel_err};
}

void require_strip(Complex s, const char* id) {
  if (!(s.real() >= 0.0 && s.real() <= 0.5)) {
    std::ostringstream msg;
    msg << id << " applies to 0 <= sigma <= 1/2";
    throw DomainError(msg.str());
  }
}

void require_tau_at_least(Complex s, double tau0, const char* id) {
  if (!(std::abs(s.imag()) >= tau0)) {
    std::ostringstream msg;
    msg << id << " applies to |tau| >= " << tau0;
    throw DomainError(msg.str());
  }
}

double pow_abs_tau(Complex s, double exponent) {
  return std::exp(exponent * std::log(std::abs(s.imag())));
}

}  // namespace

BoundRecord upper_bound_record(std::string id, Complex s, double lhs, double rhs, double tol) {
  BoundRecord r;
  r.check_id = std::move(id);
  r.s = s;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tolerance = tol;
  r.pass = r.margin >= -tol;
  return r;
}

BoundRecord identity_record(std::string id, Complex s, double observed, double expected,
                            double tol) {
  BoundRecord r;
  r.check_id = std::move(id);
  r.s = s;
  r.lhs = observed;
  r.rhs = expected;
  r.margin = -std::abs(observed - expected);
  r.tolerance = tol;
  r.pass = r.margin >= -tol;
  return r;
}

BoundRecord failed_record(std::string id, Complex s, std::string reason) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  BoundRecord r;
  r.check_id = std::move(id);
  r.s = s;
  r.lhs = r.rhs = r.margin = nan;
  r.tolerance = 0.0;
  r.pass = false;
  r.reason = std::move(reason);
  return r;
}

void validate_character(const CharacterSpec& spec) {
  const int k = spec.modulus;
  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "character mod " << k << ": " << what;
    throw DomainError(msg.str());
  };
  if (k < 1) fail("modulus must be positive");
  if (static_cast<int>(spec.values.size()) != k) fail("expected exactly k values");
  const auto& v = spec.values;
  for (int a = 0; a < k; ++a) {
    if (v[a] < -1 || v[a] > 1) fail("values must lie in {-1, 0, 1}");
    const bool unit = std::gcd(a, k) == 1;
    if (unit != (v[a] != 0)) fail("must vanish exactly on residues sharing a factor with k");
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (v[(a * b) % k] != v[a] * v[b]) fail("not completely multiplicative");
    }
  }
  if (v[(k - 1) % k] != 1) fail("not even (chi(-1) != 1)");
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    bool induced = true;
    for (int a = 1; a < k && induced; ++a) {
      if (v[a] != 0 && a % d == 1 % d && v[a] != 1) induced = false;
    }
    if (induced) {
      std::ostringstream msg;
      msg << "not primitive (induced from modulus " << d << ")";
      fail(msg.str());
    }
  }
}

const std::vector<int>& builtin_moduli() {
  static const std::vector<int> moduli{5, 8, 12};
  return moduli;
}

CharacterSpec builtin_character(int k) {
  switch (k) {
    case 5:
      return {5, {0, 1, -1, -1, 1}};
    case 8:
      return {8, {0, 1, 0, -1, 0, -1, 0, 1}};
    case 12:
      return {12, {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1}};
    default: {
      std::ostringstream msg;
      msg << "no built-in character mod " << k << " (available: 5, 8, 12)";
      throw DomainError(msg.str());
    }
  }
}

Complex log_chi(Complex s, bool allow_removable) {
  return log_chi_with_error(s, allow_removable).value;
}

Evaluation chi(Complex s, bool allow_removable) {
  return exp_evaluation(log_chi_with_error(s, allow_removable));
}

Evaluation chi_symmetric(Complex s) {
  const Evaluation upper = log_gamma(0.5 * (1.0 - s));
  const Evaluation lower = log_gamma(0.5 * s);
  const Complex lc = (s - 0.5) * kLogPi + upper.value - lower.value;
  return exp_evaluation(
      {lc, upper.abs_err + lower.abs_err + 8.0 * kEps * (std::abs(s) * kLogPi + 1.0)});
}

double abs_chi_imag_axis(double t) {
  if (!(t > 0.0)) throw DomainError("abs_chi_imag_axis requires t > 0");
  return std::sqrt(t / kTwoPi) * (-std::expm1(-kPi * t)) / std::sqrt(-std::expm1(-kTwoPi * t));
}

double chi_asymptotic(Complex s) {
  if (!(s.imag() > 0.0)) throw DomainError("chi_asymptotic requires tau > 0");
  return std::exp((0.5 - s.real()) * std::log(s.imag() / kTwoPi));
}

Evaluation chi_k(Complex s, int k) {
  if (k < 1) throw DomainError("chi_k requires k >= 1");
  LogChi lc = log_chi_with_error(s, true);
  if (k != 1) {
    const double log_k = std::log(static_cast<double>(k));
    lc.value += (0.5 - s) * log_k;
    lc.rel_err += 4.0 * kEps * std::abs(s) * log_k;
  }
  return exp_evaluation(lc);
}

Evaluation l_function(Complex s, const CharacterSpec& spec) {
  validate_character(spec);
  const int k = spec.modulus;
  Complex sum = 0.0;
  double err = 0.0;
  for (int a = 1; a <= k; ++a) {
    const int value = spec.values[a % k];
    if (value == 0) continue;
    const Evaluation h = hurwitz_zeta(s, static_cast<double>(a) / k);
    sum += static_cast<double>(value) * h.value;
    err += h.abs_err;
  }
  const Complex scale = std::exp(-s * std::log(static_cast<double>(k)));
  const Complex value = scale * sum;
  return {value, std::abs(scale) * err + 4.0 * kEps * std::abs(value)};
}

BoundRecord check_sharp_imag_axis(Complex s) {
  if (s.real() != 0.0 || s.imag() == 0.0) {
    throw DomainError("sharp-imag-axis applies to sigma = 0, tau != 0");
  }
  const double lhs = std::abs(chi(s).value);
  const double rhs = std::sqrt(std::abs(s.imag()) / kTwoPi);
  return upper_bound_record("sharp-imag-axis", s, lhs, rhs, kBoundRelSlack * rhs);
}

BoundRecord check_critical_line_modulus(Complex s) {
  if (s.real() != 0.5) throw DomainError("critical-line-modulus applies to sigma = 1/2");
  return identity_record("critical-line-modulus", s, std::abs(chi(s).value), 1.0,
                         kCriticalLineTol);
}

BoundRecord check_affine_exponent(Complex s) {
  require_strip(s, "affine-exponent");
  if (s.imag() == 0.0) throw DomainError("affine-exponent applies to tau != 0");
  // Endpoint exponents p = 1/2 at sigma_1 = 0 and q = 0 at sigma_2 = 1/2.
  constexpr double p = 0.5, q = 0.0, sigma1 = 0.0, sigma2 = 0.5;
  const double exponent = (q - p) / (sigma2 - sigma1) * (s.real() - sigma1) + p;
  const double lhs = std::abs(chi(s).value);
  const double rhs = kK8 * pow_abs_tau(s, exponent);
  return upper_bound_record("affine-exponent", s, lhs, rhs, kBoundRelSlack * rhs);
}

BoundRecord check_asymptotic_ratio(Complex s) {
  require_tau_at_least(s, kAsymptoticMinTau, "asymptotic-ratio");
  const Complex upper(s.real(), std::abs(s.imag()));
  const double ratio = std::abs(chi(s).value) / chi_asymptotic(upper);
  return identity_record("asymptotic-ratio", s, ratio, 1.0, kAsymptoticTol);
}

BoundRecord check_reflection_identity(Complex s) {
  const Complex product = chi(s).value * chi(1.0 - s).value;
  return upper_bound_record("reflection-identity", s, std::abs(product - 1.0), 0.0,
                            kReflectionTol);
}

BoundRecord check_mirror_symmetry(Complex s) {
  const double upper = std::abs(chi(s).value);
  const double lower = std::abs(chi(std::conj(s)).value);
  return identity_record("mirror-symmetry", s, upper, lower,
                         kMirrorRelTol * std::max(1.0, upper));
}

BoundRecord check_a5_majorant(Complex s) {
  require_strip(s, "A5-majorant");
  require_tau_at_least(s, 1.0, "A5-majorant");
  const double log_lhs = log_gamma(1.0 - s).value.real() + log_sin_pi(0.5 * s).real();
  const double lhs = std::exp(log_lhs);
  const double rhs =
      2.0 * std::sqrt(kTwoPi) * std::exp((0.5 - s.real()) * std::log(std::abs(1.0 - s)));
  return upper_bound_record("A5-majorant", s, lhs, rhs, kBoundRelSlack * rhs);
}

BoundRecord check_a9_majorant(Complex s) {
  require_strip(s, "A9-majorant");
  require_tau_at_least(s, 1.0, "A9-majorant");
  const double exponent = 0.5 - s.real();
  const double lhs = std::exp(exponent * std::log(std::abs(1.0 - s)));
  const double rhs = 2.0 * pow_abs_tau(s, exponent);
  return upper_bound_record("A9-majorant", s, lhs, rhs, 1e-12 * rhs);
}

BoundRecord check_k8_strip(Complex s) {
  require_strip(s, "K8-strip");
  require_tau_at_least(s, 1.0, "K8-strip");
  const double lhs = std::abs(chi(s).value);
  const double rhs = kK8 * pow_abs_tau(s, 0.5 - s.real());
  return upper_bound_record("K8-strip", s, lhs, rhs, kBoundRelSlack * rhs);
}

BoundRecord check_k8_global(Complex s) {
  require_strip(s, "K8-global");
  const double lhs = std::abs(chi(s).value);
  const double power = s.imag() == 0.0 ? 0.0 : kK8 * pow_abs_tau(s, 0.5 - s.real());
  const double rhs = std::max(power, kK8);
  return upper_bound_record("K8-global", s, lhs, rhs, kBoundRelSlack * rhs);
}

BoundRecord check_chik_asymptotic(Complex s) {
  require_tau_at_least(s, kAsymptoticMinTau, "chik-asymptotic");
  const double exponent = 0.5 - s.real();
  const double tau = std::abs(s.imag());
  double worst = 1.0;
  for (int k : builtin_moduli()) {
    const double predicted = std::exp(exponent * (std::log(k / kTwoPi) + std::log(tau)));
    const double ratio = std::abs(chi_k(s, k).value) / predicted;
    if (std::abs(ratio - 1.0) > std::abs(worst - 1.0)) worst = ratio;
  }
  return identity_record("chik-asymptotic", s, worst, 1.0, kAsymptoticTol);
}

BoundRecord check_lk_functional_eq(Complex s) {
  if (!(s.real() > -1.0 && s.real() < 2.0) || !(std::abs(s.imag()) <= 1e3) ||
      std::abs(s - 1.0) < 1e-3 || std::abs(s) < 1e-3) {
    throw DomainError("Lk-functional-eq applies to -1 < sigma < 2, |tau| <= 1e3, s away from 0, 1");
  }
  double worst = 0.0;
  for (int k : builtin_moduli()) {
    const CharacterSpec spec = builtin_character(k);
    const Complex direct = l_function(s, spec).value;
    const Complex mirrored = chi_k(s, k).value * l_function(1.0 - s, spec).value;
    worst = std::max(worst, std::abs(direct - mirrored) / std::max(1.0, std::abs(direct)));
  }
  return upper_bound_record("Lk-functional-eq", s, worst, 0.0, kLkFunctionalTol);
}

std::vector<BoundRecord> chi_bound_suite(Complex s) {
  require_strip(s, "chi_bound_suite");
  std::vector<BoundRecord> records;
  if (std::abs(s.imag()) >= 1.0) {
    records.push_back(check_k8_strip(s));
  }
  records.push_back(check_k8_global(s));
  if (s.real() == 0.0 && s.imag() != 0.0) {
    records.push_back(check_sharp_imag_axis(s));
  }
  if (s.real() == 0.5) {
    records.push_back(check_critical_line_modulus(s));
  }
  if (std::abs(s.imag()) >= 1.0) {
    records.push_back(check_a5_majorant(s));
    records.push_back(check_a9_majorant(s));
  }
  return records;
}

}  // namespace lindelof
