#include <doctest.h>

#include <cmath>

#include "lindelof/chifn.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/mellin.hpp"

using namespace lindelof;

namespace {
double lambda_target(double x) { return 2.0 * std::cos(kTwoPi * x); }
double reciprocal_target(double x) { return 2.0 / x * std::cos(kTwoPi / x); }
}  // namespace

TEST_CASE("engine on closed-form integrands") {
  const ContourSpec spec;
  const auto zero = oscillatory_line_integral(
      [](double) { return Complex(-INFINITY, 0.0); }, 1.7, spec);
  CHECK(zero.value == Complex(0.0));

  const auto gauss =
      oscillatory_line_integral([](double t) { return Complex(-t * t, 0.0); }, 1.0, spec);
  CHECK(std::abs(gauss.value - 0.2820947917738781) <= 1e-7);
  CHECK(gauss.value.real() == doctest::Approx(0.2820948).epsilon(1e-7));
  CHECK(std::abs(gauss.value - 0.2820947917738781) <= gauss.abs_err);

  // e^{-t^2} x^{-it}: (1/2pi) sqrt(pi) exp(-(log x)^2 / 4), x^{-c} with c = 1/4.
  const double x = 2.5;
  const auto shifted =
      oscillatory_line_integral([](double t) { return Complex(-t * t, 0.0); }, x, spec);
  const double want = std::pow(x, -spec.c) * std::sqrt(kPi) *
                      std::exp(-std::log(x) * std::log(x) / 4.0) / kTwoPi;
  CHECK(std::abs(shifted.value - want) <= 1e-7);

  // conjugate-symmetric integrand with a fast linear phase
  const auto sym = oscillatory_line_integral(
      [](double t) { return Complex(-0.1 * t * t, 3.0 * t); }, 1.3, spec);
  CHECK(std::abs(sym.value.imag()) <= 1e-12);
}

TEST_CASE("engine preconditions") {
  const auto f = [](double t) { return Complex(-t * t, 0.0); };
  CHECK_THROWS_AS(oscillatory_line_integral(f, 0.0, {}), DomainError);
  CHECK_THROWS_AS(oscillatory_line_integral(f, -1.0, {}), DomainError);
  ContourSpec bad;
  bad.T = 5.0;
  CHECK_THROWS_AS(oscillatory_line_integral(f, 1.0, bad), DomainError);
  bad = {};
  bad.panels = 3;
  CHECK_THROWS_AS(oscillatory_line_integral(f, 1.0, bad), DomainError);
  bad = {};
  bad.averaging_windows = 0;
  CHECK_THROWS_AS(oscillatory_line_integral(f, 1.0, bad), DomainError);
}

TEST_CASE("ringing that the windows can not remove raises ConvergenceError") {
  // Slowly decaying modulus with a fast phase: a tiny tolerance can not be met.
  ContourSpec spec;
  spec.tolerance = 1e-12;
  const auto f = [](double t) { return Complex(-0.1 * std::log1p(t * t), 0.5 * t * std::log1p(std::abs(t))); };
  CHECK_THROWS_AS(oscillatory_line_integral(f, 1.0, spec), ConvergenceError);
}

TEST_CASE("lambda from its Mellin integral") {
  for (double x : {0.25, 0.3, 0.5, 1.0, 2.0, 3.0}) {
    const Evaluation e = inverse_mellin_lambda(x);
    INFO("x = " << x << " got " << e.value << " err " << e.abs_err);
    CHECK(std::abs(e.value - lambda_target(x)) <= 1e-2);
    CHECK(std::abs(e.value.imag()) <= 1e-10);
    CHECK(std::abs(e.value - lambda_target(x)) <= e.abs_err);
  }
  CHECK(inverse_mellin_lambda(0.5).value.real() == doctest::Approx(-2.0).epsilon(0.01));
}

TEST_CASE("reciprocal form from its Mellin integral") {
  for (double x : {0.5, 1.0, 2.0, 3.0}) {
    const Evaluation e = inverse_mellin_reciprocal(x);
    INFO("x = " << x << " got " << e.value << " err " << e.abs_err);
    CHECK(std::abs(e.value - reciprocal_target(x)) <= 2e-2);
    CHECK(std::abs(e.value.imag()) <= 1e-10);
  }
  const double x = 4.0 / 7.0;
  const Evaluation r = inverse_mellin_reciprocal(x);
  const Evaluation l = inverse_mellin_lambda(1.0 / x);
  CHECK(std::abs(r.value - l.value / x) <= r.abs_err + l.abs_err / x);
}

TEST_CASE("c-independence") {
  for (double x : {0.3, 1.0, 2.0}) {
    Evaluation e[3];
    const double cs[3] = {0.1, 0.25, 0.4};
    for (int i = 0; i < 3; ++i) e[i] = inverse_mellin_lambda(x, lambda_contour(cs[i]));
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        INFO("x = " << x << " c = " << cs[i] << ", " << cs[j]);
        CHECK(std::abs(e[i].value - e[j].value) <= 2.0 * (e[i].abs_err + e[j].abs_err));
      }
    }
  }
}

TEST_CASE("doubling T does not make the error worse") {
  for (double x : {0.5, 1.0, 2.0}) {
    ContourSpec spec = lambda_contour();
    const double base = std::abs(inverse_mellin_lambda(x, spec).value - lambda_target(x));
    spec.T *= 2.0;
    const double doubled = std::abs(inverse_mellin_lambda(x, spec).value - lambda_target(x));
    INFO("x = " << x << " base " << base << " doubled " << doubled);
    CHECK(doubled <= base);
  }
}

TEST_CASE("the line can not be moved") {
  CHECK_THROWS_AS(inverse_mellin_lambda(1.0, lambda_contour(0.6)), ContourError);
  CHECK_THROWS_AS(inverse_mellin_lambda(1.0, lambda_contour(0.0)), ContourError);
  CHECK_THROWS_AS(inverse_mellin_reciprocal(1.0, reciprocal_contour(0.4)), ContourError);
  CHECK_THROWS_AS(inverse_mellin_reciprocal(1.0, reciprocal_contour(1.0)), ContourError);
  CHECK_THROWS_AS(inverse_mellin_lambda(0.2), RangeError);
  CHECK_THROWS_AS(inverse_mellin_lambda(3.5), RangeError);
  CHECK_THROWS_AS(inverse_mellin_reciprocal(0.4), RangeError);
  CHECK_THROWS_AS(inverse_mellin_lambda(-1.0), DomainError);
}

TEST_CASE("phase of log chi is continuous along the contour") {
  for (double c : {0.1, 0.25, 0.4}) {
    double prev = log_chi(Complex(1.0 - c, 405.0)).imag();
    for (double t = 405.0 - 0.01; t >= -405.0; t -= 0.01) {
      const double cur = log_chi(Complex(1.0 - c, t)).imag();
      REQUIRE(std::abs(cur - prev) < 0.5);
      prev = cur;
    }
  }
}
