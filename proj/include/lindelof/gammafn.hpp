#pragma once

#include "lindelof/types.hpp"

namespace lindelof {

/// Analytic log Gamma: real on the positive axis, continuous on C minus the
/// non-positive real axis, limit from above on the cut.
///
/// |s| <= 20 with Re s >= 1/2 uses the Lanczos form (g = 7, 9 terms), larger
/// |s| the Stirling series with ten Bernoulli terms, and Re s < 1/2 the
/// reflection formula with a continuous log sin. Throws PoleError within 1e-12
/// of a non-positive integer.
Evaluation log_gamma(Complex s);

/// exp(log_gamma(s)). Throws OverflowError when Re log Gamma exceeds the
/// double exponent range.
Evaluation gamma(Complex s);

/// |Gamma(it)| = sqrt(pi / (t sinh(pi t))), evaluated in log space.
double abs_gamma_imag_axis(double t);

/// Stirling majorant sqrt(2 pi) |1-s|^(1/2-sigma) e^(-pi|tau|/2) exp(1/(6|1-s|))
/// for |Gamma(1-s)|.
double stirling_abs_bound(Complex s);

/// A branch of log sin(pi z) that is continuous on each closed half plane
/// Im z >= 0 and Im z < 0 and never forms e^(pi |Im z|) explicitly. Equals the
/// real log on (0, 1). Returns real part -inf at the zeros of sin.
Complex log_sin_pi(Complex z);

/// log sinh(x) for x > 0 without overflow.
double log_sinh(double x);

/// e^u - 1 accurate for small |u|.
Complex expm1(Complex u);

}  // namespace lindelof
