#pragma once

#include <functional>

#include "lindelof/types.hpp"

namespace lindelof {

/// Vertical line sigma = c truncated at |tau| <= T.
struct ContourSpec {
  double c = 0.25;
  double T = 400.0;
  /// Quadrature panels per unit tau.
  int panels = 8;
  /// Number of staggered averaging windows.
  int averaging_windows = 6;
  /// Largest acceptable window spread is 10x this.
  double tolerance = 1e-3;

  /// Throws DomainError unless T >= 10, panels >= 4, windows >= 1, tolerance > 0.
  void validate() const;
};

ContourSpec lambda_contour(double c = 0.25);
ContourSpec reciprocal_contour(double c = 0.75);

/// log of the integrand on the line as a function of tau: real part is the log
/// modulus, imaginary part a continuous phase.
using LogIntegrand = std::function<Complex(double tau)>;

/// (1/2pi) x^(-c) int exp(f(tau)) x^(-i tau) dtau over the line.
///
/// Each panel is integrated by Filon's rule with the local linear phase taken
/// out exactly. The partial integrals are averaged over one ringing period
/// Delta = 2pi / |psi'(T)| starting at W staggered heights T + j Delta / W;
/// the result is the mean over windows and abs_err the window spread plus a
/// step-doubling estimate of the quadrature error.
Evaluation oscillatory_line_integral(const LogIntegrand& f, double x, const ContourSpec& spec);

/// (1 / 2 pi i) int_(c) chi(1-s) x^(-s) ds = 2 cos(2 pi x), 0 < c < 1/2, x in [1/4, 3].
Evaluation inverse_mellin_lambda(double x, const ContourSpec& spec = lambda_contour());

/// (1 / 2 pi i) int_(c) chi(s) x^(-s) ds = (2/x) cos(2 pi / x), 1/2 < c < 1, x in [0.5, 3].
Evaluation inverse_mellin_reciprocal(double x, const ContourSpec& spec = reciprocal_contour());

}  // namespace lindelof
