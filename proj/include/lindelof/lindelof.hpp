#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lindelof/chifn.hpp"
#include "lindelof/types.hpp"

namespace lindelof {

/// Unit step with H(0) = c0, c0 in (0, 1/2).
struct HeavisideConvention {
  double c0 = 0.25;

  /// Throws DomainError unless 0 < c0 < 1/2.
  void validate() const;
};

double heaviside(double x, const HeavisideConvention& conv = {});

/// (1/2 - sigma) H(1/2 - sigma).
double mu_chi_closed(double sigma, const HeavisideConvention& conv = {});

/// [mu(sigma) - mu(1 - sigma)] - (1/2 - sigma) with mu = mu_chi_closed.
double mu_functional_eq_residual(double sigma, const HeavisideConvention& conv = {});

/// The mu function of chi_k; the same closed form for every k >= 1.
double mu_k_closed(double sigma, int k, const HeavisideConvention& conv = {});

// Record forms of the mu identities at s = sigma + i tau; only sigma matters.

/// H(sigma - 1/2) + H(1/2 - sigma) equals 1 off the centre and 2 c0 on it.
BoundRecord check_heaviside_partition(Complex s, const HeavisideConvention& conv = {});
/// mu_chi_closed matches 1/2 - sigma left of the centre and 0 elsewhere.
BoundRecord check_mu_closed_form(Complex s, const HeavisideConvention& conv = {});
/// |mu_functional_eq_residual| <= 1e-15.
BoundRecord check_mu_functional_eq(Complex s, const HeavisideConvention& conv = {});

enum class MuTargetKind { zeta, chi, chi_k };

struct MuTarget {
  MuTargetKind kind = MuTargetKind::chi;
  /// Modulus for chi_k.
  int k = 1;
};

/// "zeta", "chi" or "chi_k:<k>". Throws DomainError on anything else.
MuTarget parse_mu_target(const std::string& text);
std::string to_string(const MuTarget& target);

struct MuSlopeOptions {
  int windows = 8;
  /// Sampling step min(max_step, pi / log tau).
  double max_step = 0.1;
  int workers = 1;
};

struct MuEstimate {
  MuTarget target;
  double sigma = 0.0;
  /// (geometric window midpoint, max modulus), increasing midpoint.
  std::vector<std::pair<double, double>> window_maxima;
  double slope = 0.0;
  double residual_rms = 0.0;
};

/// Least-squares slope of log(window max of |target(sigma + i tau)|) against
/// log(window midpoint) over geometric windows of [tau_min, tau_max].
/// RangeError unless 1 <= tau_min < tau_max <= 1e4; FitError with fewer than
/// four usable windows.
MuEstimate estimate_mu_slope(const MuTarget& target, double sigma, double tau_min,
                             double tau_max, const MuSlopeOptions& opts = {});

struct MomentResult {
  int k = 1;
  double T = 0.0;
  /// (1/T) int_1^T |zeta(1/2 + it)|^(2k) dt.
  double normalized_moment = 0.0;
  double quadrature_err = 0.0;
};

/// Composite Simpson with step <= quad_step, checked against the doubled step.
/// RangeError unless k in {1, 2}, 10 <= T <= 5000 and 0 < quad_step <= 0.05;
/// QuadratureError when the two steps disagree by more than 1%.
MomentResult moment_integral(int k, double T, double quad_step = 0.05, int workers = 1);

}  // namespace lindelof
