#include "lindelof/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "lindelof/chifn.hpp"
#include "lindelof/errors.hpp"

namespace lindelof {

namespace {

constexpr double kSmallTheta = 0.1;
constexpr double kPhaseStep = 1e-3;
// Per-cell quadrature target relative to the requested tolerance.
constexpr double kCellTolFactor = 1e-4;

struct Moments {
  Complex m0, m1, m2;
};

// int_{-1}^{1} v^k e^(i theta v) dv for k = 0, 1, 2.
Moments filon_moments(double theta) {
  const double t2 = theta * theta;
  if (std::abs(theta) < kSmallTheta) {
    const double m0 = 2.0 * (1.0 - t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0))));
    const double m1 = 2.0 * theta * (1.0 / 3.0 - t2 / 30.0 + t2 * t2 / 840.0 - t2 * t2 * t2 / 45360.0);
    const double m2 =
        2.0 * (1.0 / 3.0 - t2 / 10.0 + t2 * t2 / 168.0 - t2 * t2 * t2 / 6480.0 + t2 * t2 * t2 * t2 / 443520.0);
    return {m0, Complex(0.0, m1), m2};
  }
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {2.0 * s / theta, Complex(0.0, 2.0 * (s - theta * c) / t2),
          2.0 * ((t2 - 2.0) * s + 2.0 * theta * c) / (t2 * theta)};
}

struct Sample {
  double log_modulus;
  double phase;
};

// Compensated sum, added in the order given.
class NeumaierSum {
 public:
  void add(Complex z) {
    add_part(re_, re_c_, z.real());
    add_part(im_, im_c_, z.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

struct SegmentResult {
  Complex value;
  double err = 0.0;
};

// Weight 1, or a linear taper from 1 at `full` to 0 at `zero`.
struct Weight {
  bool taper = false;
  double full = 0.0;
  double zero = 0.0;
  double operator()(double tau) const {
    return taper ? (zero - tau) / (zero - full) : 1.0;
  }
};

constexpr int kMaxRefinements = 8;

class Engine {
 public:
  Engine(const LogIntegrand& f, double x, int panels, double cell_tol)
      : f_(f), log_x_(std::log(x)), panels_(panels), cell_tol_(cell_tol) {}

  Sample sample(double tau) const {
    const Complex v = f_(tau);
    return {v.real(), v.imag() - tau * log_x_};
  }

  // [a, b] split into cells of length <= 1. Each cell starts with `panels`
  // panels per unit and is refined by doubling until the fine and half-resolution
  // rules agree to cell_tol.
  SegmentResult segment(double a, double b, const Weight& w) const {
    const int cells = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) - 1e-9)));
    NeumaierSum acc;
    double err = 0.0;
    for (int k = 0; k < cells; ++k) {
      const double lo = a + (b - a) * k / cells;
      const double hi = (k + 1 == cells) ? b : a + (b - a) * (k + 1) / cells;
      const SegmentResult r = cell(lo, hi, w);
      acc.add(r.value);
      err += r.err;
    }
    return {acc.value(), err};
  }

 private:
  SegmentResult cell(double a, double b, const Weight& w) const {
    int n = std::max(2, static_cast<int>(std::ceil(std::abs(b - a) * panels_)));
    n += n % 2;
    double diff = 0.0;
    Complex fine;
    for (int level = 0; level <= kMaxRefinements; ++level, n *= 2) {
      std::vector<double> tau(2 * n + 1);
      std::vector<Sample> smp(2 * n + 1);
      const double h = (b - a) / (2.0 * n);
      for (int i = 0; i <= 2 * n; ++i) {
        tau[i] = (i == 2 * n) ? b : a + h * i;
        smp[i] = sample(tau[i]);
      }
      fine = sum_panels(tau, smp, w, 1);
      diff = std::abs(fine - sum_panels(tau, smp, w, 2));
      if (diff <= cell_tol_) break;
    }
    return {fine, diff};
  }

  static Complex panel(const double* t, const Sample* s, double wl, double wm, double wr) {
    const double half = 0.5 * (t[2] - t[0]);
    const double kappa = (s[2].phase - s[0].phase) / (t[2] - t[0]);
    const double mid = t[1];
    auto residual = [&](int k, double wk) {
      if (s[k].log_modulus == -INFINITY || wk == 0.0) return Complex(0.0);
      const double arg = s[k].phase - s[1].phase - kappa * (t[k] - mid);
      return wk * std::exp(s[k].log_modulus) * Complex(std::cos(arg), std::sin(arg));
    };
    const Complex rl = residual(0, wl);
    const Complex rm = residual(1, wm);
    const Complex rr = residual(2, wr);
    const Complex lin = 0.5 * (rr - rl);
    const Complex quad = 0.5 * (rr + rl) - rm;
    const Moments m = filon_moments(kappa * half);
    const Complex carrier(std::cos(s[1].phase), std::sin(s[1].phase));
    return half * carrier * (rm * m.m0 + lin * m.m1 + quad * m.m2);
  }

  // Panels of 2 * stride node gaps; the node count minus one is a multiple of 4.
  static Complex sum_panels(const std::vector<double>& tau, const std::vector<Sample>& smp,
                            const Weight& w, int stride) {
    NeumaierSum acc;
    const std::size_t last = tau.size() - 1;
    for (std::size_t i = 0; i + 2 * stride <= last; i += 2 * stride) {
      const double t[3] = {tau[i], tau[i + stride], tau[i + 2 * stride]};
      const Sample s[3] = {smp[i], smp[i + stride], smp[i + 2 * stride]};
      acc.add(panel(t, s, w(t[0]), w(t[1]), w(t[2])));
    }
    return acc.value();
  }

  const LogIntegrand& f_;
  double log_x_;
  int panels_;
  double cell_tol_;
};

void check_x_range(double x, double lo, double hi) {
  if (!(x > 0.0)) throw DomainError("Mellin inversion needs x > 0");
  if (x < lo || x > hi) {
    std::ostringstream msg;
    msg << "x = " << x << " is outside the supported range [" << lo << ", " << hi << "]";
    throw RangeError(msg.str());
  }
}

}  // namespace

void ContourSpec::validate() const {
  if (!(T >= 10.0) || !std::isfinite(T)) throw DomainError("contour height T must be >= 10");
  if (panels < 4) throw DomainError("contour needs at least 4 panels per unit tau");
  if (averaging_windows < 1) throw DomainError("contour needs at least one averaging window");
  if (!(tolerance > 0.0)) throw DomainError("contour tolerance must be positive");
  if (!std::isfinite(c)) throw DomainError("contour abscissa must be finite");
}

ContourSpec lambda_contour(double c) {
  ContourSpec spec;
  spec.c = c;
  return spec;
}

ContourSpec reciprocal_contour(double c) {
  ContourSpec spec;
  spec.c = c;
  return spec;
}

Evaluation oscillatory_line_integral(const LogIntegrand& f, double x, const ContourSpec& spec) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("oscillatory_line_integral needs x > 0");
  spec.validate();
  const double scale = std::exp(-spec.c * std::log(x)) / kTwoPi;
  const Engine engine(f, x, spec.panels, kCellTolFactor * spec.tolerance / scale);

  // Ringing period from the phase slope at the truncation height.
  const double slope_hi =
      (engine.sample(spec.T + kPhaseStep).phase - engine.sample(spec.T - kPhaseStep).phase) /
      (2.0 * kPhaseStep);
  const double slope_lo =
      (engine.sample(-spec.T + kPhaseStep).phase - engine.sample(-spec.T - kPhaseStep).phase) /
      (2.0 * kPhaseStep);
  const double slope = std::max(std::abs(slope_hi), std::abs(slope_lo));
  // A flat phase gives no ringing to average out; a unit period then suffices.
  const double period = slope > kTwoPi / spec.T ? kTwoPi / slope : 1.0;

  // Shared core over [-T, T], ascending tau.
  const Weight flat;
  const SegmentResult core_left = engine.segment(-spec.T, 0.0, flat);
  const SegmentResult core_right = engine.segment(0.0, spec.T, flat);

  const int windows = spec.averaging_windows;
  std::vector<Complex> means(windows);
  double quad_err = core_left.err + core_right.err;
  double window_err = 0.0;
  for (int j = 0; j < windows; ++j) {
    const double start = spec.T + period * j / windows;
    const double stop = start + period;
    const Weight left_taper{true, -start, -stop};
    const Weight right_taper{true, start, stop};
    NeumaierSum sum;
    double err = 0.0;
    auto add = [&](const SegmentResult& r) {
      sum.add(r.value);
      err += r.err;
    };
    add(engine.segment(-stop, -start, left_taper));
    if (j > 0) add(engine.segment(-start, -spec.T, flat));
    add(core_left);
    add(core_right);
    if (j > 0) add(engine.segment(spec.T, start, flat));
    add(engine.segment(start, stop, right_taper));
    means[j] = sum.value();
    window_err = std::max(window_err, err - core_left.err - core_right.err);
  }
  quad_err += window_err;

  NeumaierSum total;
  for (const Complex& m : means) total.add(m);
  const Complex mean = total.value() / static_cast<double>(windows);
  double spread = 0.0;
  for (const Complex& m : means) spread = std::max(spread, std::abs(m - mean));

  spread *= scale;
  quad_err *= scale;
  if (spread > 10.0 * spec.tolerance) {
    std::ostringstream msg;
    msg << "averaging windows disagree by " << spread << " (tolerance " << spec.tolerance << ")";
    throw ConvergenceError(msg.str());
  }
  return {mean * scale, spread + quad_err};
}

Evaluation inverse_mellin_lambda(double x, const ContourSpec& spec) {
  if (!(spec.c > 0.0 && spec.c < 0.5)) {
    throw ContourError("the lambda integral needs 0 < c < 1/2; the line can not be moved");
  }
  check_x_range(x, 0.25, 3.0);
  const double c = spec.c;
  const LogIntegrand f = [c](double tau) { return log_chi(Complex(1.0 - c, -tau)); };
  return oscillatory_line_integral(f, x, spec);
}

Evaluation inverse_mellin_reciprocal(double x, const ContourSpec& spec) {
  if (!(spec.c > 0.5 && spec.c < 1.0)) {
    throw ContourError("the reciprocal integral needs 1/2 < c < 1; the line can not be moved");
  }
  check_x_range(x, 0.5, 3.0);
  const double c = spec.c;
  const LogIntegrand f = [c](double tau) { return log_chi(Complex(c, tau)); };
  return oscillatory_line_integral(f, x, spec);
}

}  // namespace lindelof
