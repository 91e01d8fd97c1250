#pragma once

#include "lindelof/types.hpp"

namespace lindelof {

struct ZetaConfig {
  /// Direct-sum cutoff N ~ max(20, em_terms_factor * |tau|).
  double em_terms_factor = 1.3;
  /// Number of Bernoulli correction terms, 2..30.
  int bernoulli_terms = 8;
  /// The cutoff grows (up to 8x) until the truncation estimate meets this.
  double target_abs_err = 1e-13;

  /// Throws DomainError when a field is outside its documented range.
  void validate() const;
};

/// Euler-Maclaurin evaluation of zeta(s) for sigma >= -1, |tau| <= 2e4.
Evaluation zeta_em(Complex s, const ZetaConfig& cfg = {});

/// Alternating (eta) series with Borwein's Chebyshev-weighted acceleration.
/// Restricted to sigma > 0, |tau| <= 1e3. Independent of zeta_em.
Evaluation zeta_eta(Complex s);

/// zeta on the whole plane minus s = 1: Euler-Maclaurin for sigma >= 1/2 and
/// chi(s) zeta(1-s) below the critical line.
Evaluation zeta(Complex s, const ZetaConfig& cfg = {});

/// Hurwitz zeta sum_{n>=0} (n+a)^(-s) for a in (0, 1], sigma > -1, |tau| <= 1e3.
Evaluation hurwitz_zeta(Complex s, double a, const ZetaConfig& cfg = {});

}  // namespace lindelof
