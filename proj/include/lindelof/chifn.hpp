#pragma once

#include <string>
#include <vector>

#include "lindelof/types.hpp"

namespace lindelof {

/// One inequality or identity check at a sample point.
///
/// Upper-bound checks store margin = rhs - lhs. Two-sided identity checks store
/// the observed and expected values in lhs/rhs and margin = -|lhs - rhs|. In
/// both cases pass <=> margin >= -tolerance. Records of points whose
/// evaluation failed carry NaN numbers, pass = false and a reason.
struct BoundRecord {
  std::string check_id;
  Complex s;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string reason;
};

BoundRecord upper_bound_record(std::string id, Complex s, double lhs, double rhs, double tol);
BoundRecord identity_record(std::string id, Complex s, double observed, double expected,
                            double tol);
BoundRecord failed_record(std::string id, Complex s, std::string reason);

/// A real Dirichlet character mod k given by its values on 0..k-1.
struct CharacterSpec {
  int modulus = 1;
  std::vector<int> values{1};
};

/// Throws DomainError unless the character is real, completely
/// multiplicative, supported exactly on the units, even and primitive.
void validate_character(const CharacterSpec& spec);

/// The built-in even real primitive characters, k in {5, 8, 12}.
CharacterSpec builtin_character(int k);
const std::vector<int>& builtin_moduli();

/// log chi(s) for chi(s) = (1/pi)(2pi)^s sin(pi s/2) Gamma(1-s). The imaginary
/// part is continuous along vertical lines with |Re s/2 - round(Re s/2)| < 1/2.
/// Throws PoleError at odd positive integers; at even positive integers
/// returns the removable limit, or throws IndeterminateError when
/// allow_removable is false. Real part is -inf at the trivial zeros.
Complex log_chi(Complex s, bool allow_removable = true);

Evaluation chi(Complex s, bool allow_removable = true);

/// pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2); an independent route to chi.
Evaluation chi_symmetric(Complex s);

/// Closed form sqrt(t/2pi) (1 - e^(-pi t)) / sqrt(1 - e^(-2 pi t)) of |chi(it)|.
double abs_chi_imag_axis(double t);

/// (tau / 2pi)^(1/2 - sigma), the large-tau modulus of chi.
double chi_asymptotic(Complex s);

/// chi_k(s) = k^(1/2 - s) chi(s).
Evaluation chi_k(Complex s, int k);

/// L(s) = k^(-s) sum_{a=1}^{k} chi(a) zeta(s, a/k) for sigma > -1, |tau| <= 1e3.
Evaluation l_function(Complex s, const CharacterSpec& spec);

// Individual checks. Each throws DomainError outside the region where its
// statement applies.
inline constexpr double kK8 = 8.0;
inline constexpr double kBoundRelSlack = 1e-10;
inline constexpr double kCriticalLineTol = 1e-9;
inline constexpr double kReflectionTol = 1e-9;
inline constexpr double kMirrorRelTol = 1e-12;
inline constexpr double kAsymptoticTol = 1e-2;
inline constexpr double kAsymptoticMinTau = 50.0;
inline constexpr double kLkFunctionalTol = 1e-8;

/// |chi(i tau)| <= sqrt(tau / 2pi), on sigma = 0.
BoundRecord check_sharp_imag_axis(Complex s);
/// |chi(1/2 + i tau)| = 1.
BoundRecord check_critical_line_modulus(Complex s);
/// |chi| <= K tau^k(sigma), k(sigma) the affine interpolant of the endpoint
/// exponents 1/2 at sigma = 0 and 0 at sigma = 1/2, K = 8.
BoundRecord check_affine_exponent(Complex s);
/// |chi(s)| / (tau/2pi)^(1/2-sigma) = 1 within 1e-2 for |tau| >= 50.
BoundRecord check_asymptotic_ratio(Complex s);
/// |chi(s) chi(1-s) - 1| <= 1e-9.
BoundRecord check_reflection_identity(Complex s);
/// |chi(sigma + i tau)| = |chi(sigma - i tau)|.
BoundRecord check_mirror_symmetry(Complex s);
/// |Gamma(1-s) sin(pi s/2)| <= 2 sqrt(2pi) |1-s|^(1/2-sigma), |tau| >= 1.
BoundRecord check_a5_majorant(Complex s);
/// |1-s|^(1/2-sigma) <= 2 |tau|^(1/2-sigma), |tau| >= 1.
BoundRecord check_a9_majorant(Complex s);
/// |chi| <= 8 |tau|^(1/2-sigma), 0 <= sigma <= 1/2, |tau| >= 1.
BoundRecord check_k8_strip(Complex s);
/// |chi| <= max(8 |tau|^(1/2-sigma), 8), 0 <= sigma <= 1/2.
BoundRecord check_k8_global(Complex s);
/// |chi_k| / ((k/2pi)^(1/2-sigma) tau^(1/2-sigma)) = 1 within 1e-2, worst k in {5, 8, 12}.
BoundRecord check_chik_asymptotic(Complex s);
/// |L(s) - k^(1/2-s) chi(s) L(1-s)| / max(1, |L(s)|) <= 1e-8, worst k in {5, 8, 12}.
BoundRecord check_lk_functional_eq(Complex s);

/// The K <= 8 bound chain at one point of the half strip 0 <= sigma <= 1/2:
/// K8-strip and the A5/A9 majorants for |tau| >= 1, K8-global everywhere,
/// the sharp imaginary-axis bound on sigma = 0 and the unit modulus on sigma = 1/2.
std::vector<BoundRecord> chi_bound_suite(Complex s);

}  // namespace lindelof
