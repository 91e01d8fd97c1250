#include "lindelof/lindelof.hpp"

#include <cmath>
#include <sstream>

#include "lindelof/chifn.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/parallel.hpp"
#include "lindelof/zetafn.hpp"

namespace lindelof {

namespace {

constexpr int kMinWindows = 4;
constexpr double kMuTol = 1e-15;
constexpr double kMomentRelTol = 1e-2;
// Chunks of the moment quadrature; fixed so the sum order does not depend on workers.
constexpr int kMomentChunks = 64;

double target_modulus(const MuTarget& target, Complex s) {
  switch (target.kind) {
    case MuTargetKind::zeta:
      return std::abs(zeta(s).value);
    case MuTargetKind::chi:
      return std::abs(chi(s).value);
    case MuTargetKind::chi_k:
      return std::abs(chi_k(s, target.k).value);
  }
  return 0.0;
}

double sample_step(double tau, double max_step) {
  const double lt = std::log(tau);
  return lt > 0.0 ? std::min(max_step, kPi / lt) : max_step;
}

}  // namespace

void HeavisideConvention::validate() const {
  if (!(c0 > 0.0 && c0 < 0.5)) {
    std::ostringstream msg;
    msg << "H(0) = " << c0 << " must lie in (0, 1/2)";
    throw DomainError(msg.str());
  }
}

double heaviside(double x, const HeavisideConvention& conv) {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return 0.0;
  return conv.c0;
}

double mu_chi_closed(double sigma, const HeavisideConvention& conv) {
  const double d = 0.5 - sigma;
  // H(0) multiplies a zero factor; keep the sign of zero out of it.
  return d == 0.0 ? 0.0 : d * heaviside(d, conv);
}

double mu_functional_eq_residual(double sigma, const HeavisideConvention& conv) {
  return (mu_chi_closed(sigma, conv) - mu_chi_closed(1.0 - sigma, conv)) - (0.5 - sigma);
}

double mu_k_closed(double sigma, int k, const HeavisideConvention& conv) {
  if (k < 1) throw DomainError("chi_k needs k >= 1");
  return mu_chi_closed(sigma, conv);
}

BoundRecord check_heaviside_partition(Complex s, const HeavisideConvention& conv) {
  conv.validate();
  const double sigma = s.real();
  const double sum = heaviside(sigma - 0.5, conv) + heaviside(0.5 - sigma, conv);
  const double expected = sigma == 0.5 ? 2.0 * conv.c0 : 1.0;
  return identity_record("heaviside-partition", s, sum, expected, 0.0);
}

BoundRecord check_mu_closed_form(Complex s, const HeavisideConvention& conv) {
  conv.validate();
  const double sigma = s.real();
  const double expected = sigma < 0.5 ? 0.5 - sigma : 0.0;
  return identity_record("mu-closed-form", s, mu_chi_closed(sigma, conv), expected, kMuTol);
}

BoundRecord check_mu_functional_eq(Complex s, const HeavisideConvention& conv) {
  conv.validate();
  return upper_bound_record("mu-functional-eq", s,
                            std::abs(mu_functional_eq_residual(s.real(), conv)), 0.0, kMuTol);
}

MuTarget parse_mu_target(const std::string& text) {
  if (text == "zeta") return {MuTargetKind::zeta, 1};
  if (text == "chi") return {MuTargetKind::chi, 1};
  if (text.rfind("chi_k:", 0) == 0) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(text.substr(6), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used > 0 && used == text.size() - 6 && k >= 1) return {MuTargetKind::chi_k, k};
  }
  throw DomainError("unknown mu target '" + text + "' (zeta, chi or chi_k:<k>)");
}

std::string to_string(const MuTarget& target) {
  switch (target.kind) {
    case MuTargetKind::zeta:
      return "zeta";
    case MuTargetKind::chi:
      return "chi";
    case MuTargetKind::chi_k:
      return "chi_k:" + std::to_string(target.k);
  }
  return "";
}

MuEstimate estimate_mu_slope(const MuTarget& target, double sigma, double tau_min,
                             double tau_max, const MuSlopeOptions& opts) {
  if (!(tau_min >= 1.0 && tau_min < tau_max && tau_max <= 1e4)) {
    std::ostringstream msg;
    msg << "mu slope range [" << tau_min << ", " << tau_max << "] must satisfy 1 <= min < max <= 1e4";
    throw RangeError(msg.str());
  }
  if (!std::isfinite(sigma)) throw DomainError("sigma must be finite");
  if (target.kind == MuTargetKind::chi_k && target.k < 1) throw DomainError("chi_k needs k >= 1");
  if (!(opts.max_step > 0.0)) throw DomainError("sampling step must be positive");
  if (opts.windows < kMinWindows) {
    throw FitError("mu slope needs at least 4 windows");
  }

  const int w = opts.windows;
  const double log_ratio = std::log(tau_max / tau_min);
  // Sample points first; the top windows hold most of them, so the parallel
  // loop runs over points rather than windows.
  std::vector<double> taus;
  std::vector<std::size_t> owner;
  for (int j = 0; j < w; ++j) {
    const double lo = tau_min * std::exp(log_ratio * j / w);
    const double hi = (j + 1 == w) ? tau_max : tau_min * std::exp(log_ratio * (j + 1) / w);
    for (double tau = lo;; tau += sample_step(tau, opts.max_step)) {
      const double t = std::min(tau, hi);
      taus.push_back(t);
      owner.push_back(static_cast<std::size_t>(j));
      if (t >= hi) break;
    }
  }
  std::vector<double> moduli(taus.size(), 0.0);
  parallel_for(taus.size(), opts.workers, [&](std::size_t i) {
    moduli[i] = target_modulus(target, Complex(sigma, taus[i]));
  });
  std::vector<double> maxima(w, 0.0);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (std::isfinite(moduli[i])) maxima[owner[i]] = std::max(maxima[owner[i]], moduli[i]);
  }

  MuEstimate est;
  est.target = target;
  est.sigma = sigma;
  std::vector<double> xs, ys;
  for (int j = 0; j < w; ++j) {
    const double mid = tau_min * std::exp(log_ratio * (j + 0.5) / w);
    est.window_maxima.emplace_back(mid, maxima[j]);
    if (maxima[j] > 0.0 && std::isfinite(maxima[j])) {
      xs.push_back(std::log(mid));
      ys.push_back(std::log(maxima[j]));
    }
  }
  if (static_cast<int>(xs.size()) < kMinWindows) {
    std::ostringstream msg;
    msg << "only " << xs.size() << " usable windows for the mu slope fit";
    throw FitError(msg.str());
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  est.slope = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + est.slope * (xs[i] - mx));
    rss += r * r;
  }
  est.residual_rms = std::sqrt(rss / n);
  if (!std::isfinite(est.slope)) throw FitError("mu slope fit is degenerate");
  return est;
}

MomentResult moment_integral(int k, double T, double quad_step, int workers) {
  if (k != 1 && k != 2) throw RangeError("moment_integral supports k = 1 and k = 2");
  if (!(T >= 10.0 && T <= 5000.0)) throw RangeError("moment_integral needs 10 <= T <= 5000");
  if (!(quad_step > 0.0 && quad_step <= 0.05)) {
    throw RangeError("moment_integral needs 0 < quad_step <= 0.05");
  }

  // n intervals, a multiple of 4 so the doubled step is also a Simpson rule.
  int n = static_cast<int>(std::ceil((T - 1.0) / quad_step));
  n += (4 - n % 4) % 4;
  const double h = (T - 1.0) / n;

  // Per node: |zeta|^(2k) and its propagated error.
  std::vector<double> f(n + 1), ferr(n + 1);
  const int chunks = std::min(kMomentChunks, n + 1);
  parallel_for(chunks, workers, [&](std::size_t c) {
    const int begin = static_cast<int>((static_cast<long long>(n + 1) * c) / chunks);
    const int end = static_cast<int>((static_cast<long long>(n + 1) * (c + 1)) / chunks);
    for (int i = begin; i < end; ++i) {
      const double t = (i == n) ? T : 1.0 + h * i;
      const Evaluation z = zeta(Complex(0.5, t));
      const double a = std::abs(z.value);
      f[i] = std::pow(a, 2 * k);
      ferr[i] = 2.0 * k * std::pow(a + z.abs_err, 2 * k - 1) * z.abs_err;
    }
  });

  double fine = 0.0, coarse = 0.0, err_fold = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double wf = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    fine += wf * f[i];
    err_fold += wf * ferr[i];
    if (i % 2 == 0) {
      const int j = i / 2;
      const double wc = (i == 0 || i == n) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      coarse += wc * f[i];
    }
  }
  fine *= h / 3.0;
  coarse *= 2.0 * h / 3.0;
  err_fold *= h / 3.0;

  const double diff = std::abs(fine - coarse);
  if (diff > kMomentRelTol * std::abs(fine)) {
    std::ostringstream msg;
    msg << "step halving changes the moment by " << diff / std::abs(fine) * 100.0 << "%";
    throw QuadratureError(msg.str());
  }
  MomentResult out;
  out.k = k;
  out.T = T;
  out.normalized_moment = fine / T;
  out.quadrature_err = (diff / 15.0 + err_fold) / T;
  return out;
}

}  // namespace lindelof
