#include <doctest.h>

#include <cmath>

#include "lindelof/errors.hpp"
#include "lindelof/lindelof.hpp"

using namespace lindelof;

namespace {
const HeavisideConvention kConventions[] = {{0.1}, {0.25}, {0.49}};
}

TEST_CASE("heaviside") {
  CHECK(heaviside(0.3) == 1.0);
  CHECK(heaviside(-0.2) == 0.0);
  CHECK(heaviside(0.0, {0.25}) == 0.25);
  CHECK(heaviside(-0.0, {0.1}) == 0.1);
  for (const auto& conv : kConventions) {
    for (int i = 0; i <= 1000; ++i) {
      const double sigma = -3.0 + 7.0 * i / 1000.0;
      const double a = 0.5;
      const double sum = heaviside(sigma - a, conv) + heaviside(a - sigma, conv);
      if (sigma == a) {
        CHECK(sum == 2.0 * conv.c0);
        CHECK(sum < 1.0);
      } else {
        CHECK(sum == 1.0);
      }
    }
  }
  CHECK_THROWS_AS(HeavisideConvention{0.5}.validate(), DomainError);
  CHECK_THROWS_AS(HeavisideConvention{0.0}.validate(), DomainError);
  CHECK_NOTHROW(HeavisideConvention{0.49}.validate());
}

TEST_CASE("closed-form mu") {
  CHECK(mu_chi_closed(0.0) == 0.5);
  CHECK(mu_chi_closed(0.75) == 0.0);
  for (const auto& conv : kConventions) CHECK(mu_chi_closed(0.5, conv) == 0.0);
  CHECK(mu_k_closed(0.0, 3) == 0.5);
  CHECK(mu_k_closed(0.6, 7) == 0.0);
  CHECK_THROWS_AS(mu_k_closed(0.2, 0), DomainError);
  for (int i = 0; i <= 100; ++i) {
    const double sigma = -2.0 + 5.0 * i / 100.0;
    for (int k : {1, 2, 5, 12}) CHECK(mu_k_closed(sigma, k) == mu_chi_closed(sigma));
  }
}

TEST_CASE("mu is non-increasing, convex and non-negative") {
  for (const auto& conv : kConventions) {
    std::vector<double> mu;
    for (int i = 0; i <= 1000; ++i) mu.push_back(mu_chi_closed(-3.0 + 7.0 * i / 1000.0, conv));
    for (std::size_t i = 0; i < mu.size(); ++i) {
      CHECK(mu[i] >= 0.0);
      if (i > 0) CHECK(mu[i] <= mu[i - 1]);
      if (i > 0 && i + 1 < mu.size()) CHECK(mu[i + 1] - 2.0 * mu[i] + mu[i - 1] >= -1e-15);
    }
  }
}

TEST_CASE("functional-equation residual vanishes") {
  CHECK(mu_functional_eq_residual(0.2) == 0.0);
  CHECK(std::abs(mu_functional_eq_residual(0.9)) <= 1e-15);
  CHECK(mu_functional_eq_residual(0.5) == 0.0);
  for (const auto& conv : kConventions) {
    for (int i = 0; i <= 1000; ++i) {
      CHECK(std::abs(mu_functional_eq_residual(-3.0 + 7.0 * i / 1000.0, conv)) <= 1e-15);
    }
  }
}

TEST_CASE("mu targets") {
  CHECK(parse_mu_target("zeta").kind == MuTargetKind::zeta);
  CHECK(parse_mu_target("chi_k:8").k == 8);
  CHECK(to_string(parse_mu_target("chi_k:12")) == "chi_k:12");
  CHECK_THROWS_AS(parse_mu_target("chi_k:"), DomainError);
  CHECK_THROWS_AS(parse_mu_target("chi_k:0"), DomainError);
  CHECK_THROWS_AS(parse_mu_target("eta"), DomainError);
}

TEST_CASE("chi slope recovers 1/2 - sigma") {
  for (int i = 0; i <= 5; ++i) {
    const double sigma = 0.1 * i;
    const MuEstimate e = estimate_mu_slope({MuTargetKind::chi}, sigma, 10.0, 3000.0);
    INFO("sigma = " << sigma);
    CHECK(std::abs(e.slope - (0.5 - sigma)) <= 0.02);
    CHECK(e.window_maxima.size() == 8);
    for (std::size_t j = 1; j < e.window_maxima.size(); ++j) {
      CHECK(e.window_maxima[j].first > e.window_maxima[j - 1].first);
    }
    CHECK(e.residual_rms >= 0.0);
  }
  const MuEstimate k5 = estimate_mu_slope({MuTargetKind::chi_k, 5}, 0.25, 10.0, 3000.0);
  CHECK(std::abs(k5.slope - 0.25) <= 0.02);
}

TEST_CASE("zeta slopes") {
  const MuEstimate left = estimate_mu_slope({MuTargetKind::zeta}, -1.0, 10.0, 3000.0);
  CHECK(std::abs(left.slope - 1.5) <= 0.1);
  // Estimate-level subadditivity corridor.
  for (double sigma : {-1.0, -0.5, 0.0}) {
    const double here =
        sigma == -1.0 ? left.slope : estimate_mu_slope({MuTargetKind::zeta}, sigma, 10.0, 3000.0).slope;
    const double mirror = estimate_mu_slope({MuTargetKind::zeta}, 1.0 - sigma, 10.0, 3000.0).slope;
    INFO("sigma = " << sigma << " slope " << here << " mirror " << mirror);
    CHECK(here <= mu_chi_closed(sigma) + mirror + 0.15);
  }
}

TEST_CASE("slope estimation is independent of the worker count") {
  MuSlopeOptions one, four;
  four.workers = 4;
  const MuEstimate a = estimate_mu_slope({MuTargetKind::zeta}, 0.5, 10.0, 200.0, one);
  const MuEstimate b = estimate_mu_slope({MuTargetKind::zeta}, 0.5, 10.0, 200.0, four);
  CHECK(a.slope == b.slope);
  CHECK(a.window_maxima == b.window_maxima);
}

TEST_CASE("slope preconditions") {
  CHECK_THROWS_AS(estimate_mu_slope({MuTargetKind::chi}, 0.0, 0.5, 100.0), RangeError);
  CHECK_THROWS_AS(estimate_mu_slope({MuTargetKind::chi}, 0.0, 100.0, 100.0), RangeError);
  CHECK_THROWS_AS(estimate_mu_slope({MuTargetKind::chi}, 0.0, 10.0, 2e4), RangeError);
  MuSlopeOptions three;
  three.windows = 3;
  CHECK_THROWS_AS(estimate_mu_slope({MuTargetKind::chi}, 0.0, 10.0, 100.0, three), FitError);
  // zeta(-2 + i tau) vanishes only at tau = 0.
  CHECK_NOTHROW(estimate_mu_slope({MuTargetKind::zeta}, -2.0, 1.0, 20.0));
}

TEST_CASE("moment integral k = 1") {
  const double gamma = 0.57721566490153286;
  const MomentResult m100 = moment_integral(1, 100.0);
  const double lead = std::log(100.0 / kTwoPi) + 2.0 * gamma - 1.0;
  CHECK(lead == doctest::Approx(2.92).epsilon(1e-3));
  CHECK(std::abs(m100.normalized_moment / lead - 1.0) <= 0.10);
  CHECK(m100.normalized_moment > 0.0);
  CHECK(m100.quadrature_err >= 0.0);
  CHECK(m100.quadrature_err <= 1e-6);
  const MomentResult m500 = moment_integral(1, 500.0);
  const MomentResult m1000 = moment_integral(1, 1000.0, 0.05, 2);
  const double rise = m1000.normalized_moment - m500.normalized_moment;
  CHECK(std::abs(rise / std::log(2.0) - 1.0) <= 0.25);
}

TEST_CASE("moment integral k = 2") {
  const MomentResult m = moment_integral(2, 200.0);
  const double ratio = m.normalized_moment / std::pow(std::log(200.0), 4);
  MESSAGE("k = 2, T = 200: moment " << m.normalized_moment << ", ratio to log^4 T " << ratio);
  CHECK(ratio > 0.001);
  CHECK(ratio < 10.0);
}

TEST_CASE("moment preconditions") {
  CHECK_THROWS_AS(moment_integral(3, 100.0), RangeError);
  CHECK_THROWS_AS(moment_integral(1, 5.0), RangeError);
  CHECK_THROWS_AS(moment_integral(1, 6000.0), RangeError);
  CHECK_THROWS_AS(moment_integral(1, 100.0, 0.1), RangeError);
  CHECK_THROWS_AS(moment_integral(1, 100.0, 0.0), RangeError);
}
