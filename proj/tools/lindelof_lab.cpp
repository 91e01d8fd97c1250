// lindelof-lab: evaluate chi, zeta and friends, sweep the bound checks and
// write reports.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lindelof/chifn.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/gammafn.hpp"
#include "lindelof/harness.hpp"
#include "lindelof/lindelof.hpp"
#include "lindelof/mellin.hpp"
#include "lindelof/zetafn.hpp"

namespace {

using namespace lindelof;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr double kEulerGamma = 0.57721566490153286;

// Bad flags or config values; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config;
  std::string out;
  std::string format;
  int workers = 1;
  std::uint64_t seed = 0;
  double c0 = 0.25;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "flat key = value file; flags win over it");
  sub->add_option("--out", c.out, "write the result to this path");
  sub->add_option("--format", c.format, "json, csv or markdown");
  sub->add_option("--workers", c.workers, "worker threads (default $LINDELOF_LAB_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "seed for randomized samples");
  sub->add_option("--c0", c.c0, "H(0), in (0, 1/2)");
}

std::string fixed(double v) {
  char buf[64];
  const double a = std::abs(v);
  if (v == 0.0) v = 0.0;
  if (a != 0.0 && (a < 1e-4 || a >= 1e15 || !std::isfinite(a))) {
    std::snprintf(buf, sizeof buf, "%.15e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.15f", v);
  }
  return buf;
}

std::string complex_text(Complex z) {
  const std::string im = fixed(std::abs(z.imag()));
  return fixed(z.real()) + (std::signbit(z.imag()) && z.imag() != 0.0 ? "-" : "+") + im + "i";
}

double parse_real(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw UsageError("not a number: '" + text + "'");
  }
  return v;
}

// "2", "0.5+14i", "-3.5e2-2i", "2i", "-i", "(0.5,14)".
Complex parse_complex(std::string text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t += ch;
  }
  if (t.size() > 2 && t.front() == '(' && t.back() == ')') {
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw UsageError("bad complex number '" + text + "'");
    return {parse_real(t.substr(1, comma - 1)), parse_real(t.substr(comma + 1, t.size() - comma - 2))};
  }
  if (t.empty()) throw UsageError("empty complex number");
  if (t.back() != 'i' && t.back() != 'j') return {parse_real(t), 0.0};
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_real(item));
  }
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

ReportFormat format_or(const std::string& format, const std::string& path, ReportFormat fallback) {
  try {
    if (!format.empty()) return parse_report_format(format);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  auto ends_with = [&](const char* ext) {
    const std::string e(ext);
    return path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0;
  };
  if (ends_with(".json")) return ReportFormat::json;
  if (ends_with(".csv")) return ReportFormat::csv;
  if (ends_with(".md")) return ReportFormat::markdown;
  return fallback;
}

HeavisideConvention convention(const Common& c) {
  HeavisideConvention conv{c.c0};
  try {
    conv.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return conv;
}

void print_summary(const SuiteReport& report) {
  std::printf("%-22s %8s %8s %14s\n", "check", "records", "failures", "worst margin");
  for (const auto& s : report.summaries) {
    std::printf("%-22s %8zu %8zu %14.6g\n", s.check_id.c_str(), s.count, s.failures, s.worst_margin);
  }
  for (const auto& [k, v] : report.statistics) std::printf("%s = %.17g\n", k.c_str(), v);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw IOError("can not open '" + path + "' for writing");
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (std::fclose(f) != 0 || !ok) throw IOError("failed writing '" + path + "'");
}

// --- subcommands -------------------------------------------------------------

struct EvalArgs {
  std::string function;
  std::string s;
  int k = 0;
};

int run_eval(const EvalArgs& a) {
  const Complex s = parse_complex(a.s);
  Evaluation e;
  if (a.function == "zeta") {
    e = zeta(s);
  } else if (a.function == "gamma") {
    e = lindelof::gamma(s);
  } else if (a.function == "chi") {
    e = chi(s);
  } else if (a.function == "chi_k") {
    if (a.k < 1) throw UsageError("chi_k needs --k >= 1");
    e = chi_k(s, a.k);
  } else if (a.function == "L") {
    if (a.k == 0) throw UsageError("L needs --k (one of 5, 8, 12)");
    CharacterSpec spec;
    try {
      spec = builtin_character(a.k);
    } catch (const DomainError& err) {
      throw UsageError(err.what());
    }
    e = l_function(s, spec);
  } else {
    throw UsageError("unknown function '" + a.function + "'");
  }
  std::printf("function: %s\n", a.function.c_str());
  std::printf("s: %s\n", complex_text(s).c_str());
  std::printf("value: %s\n", complex_text(e.value).c_str());
  std::printf("modulus: %s\n", fixed(std::abs(e.value)).c_str());
  std::printf("abs_err: %.3e\n", e.abs_err);
  return 0;
}

struct BoundsArgs {
  GridSpec grid;
  std::string tau_scale = "geometric";
  std::string checks = "all";
  int random_samples = 0;
};

int run_bounds(const BoundsArgs& a, const Common& c) {
  GridSpec grid = a.grid;
  std::vector<std::string> checks;
  try {
    grid.tau_scale = parse_tau_scale(a.tau_scale);
    grid.validate();
    checks = parse_check_list(a.checks);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  SweepOptions opts;
  opts.workers = c.workers;
  opts.random_samples = a.random_samples;
  opts.seed = c.seed;
  const SuiteReport report = run_bounds_suite(grid, checks, convention(c), opts);
  if (c.out.empty()) {
    std::fputs(render_report(report, format_or(c.format, "", ReportFormat::markdown)).c_str(), stdout);
  } else {
    write_report(report, format_or(c.format, c.out, ReportFormat::json), c.out);
    print_summary(report);
  }
  return report.all_pass() ? 0 : kExitFail;
}

struct MuArgs {
  std::string target = "zeta";
  std::string sigmas = "0.5";
  double tau_min = 10.0;
  double tau_max = 3000.0;
  int windows = 8;
  double max_step = 0.1;
};

int run_mu(const MuArgs& a, const Common& c) {
  MuTarget target;
  try {
    target = parse_mu_target(a.target);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const HeavisideConvention conv = convention(c);
  MuSlopeOptions opts;
  opts.windows = a.windows;
  opts.max_step = a.max_step;
  opts.workers = c.workers;
  SuiteReport report;
  report.config_echo = {{"target", to_string(target)}, {"sigma", a.sigmas},
                        {"tau_min", fixed(a.tau_min)}, {"tau_max", fixed(a.tau_max)},
                        {"windows", std::to_string(a.windows)}};
  std::printf("%-10s %8s %12s %12s %14s\n", "target", "sigma", "slope", "rms", "mu_chi closed");
  for (double sigma : parse_list(a.sigmas)) {
    const MuEstimate e = estimate_mu_slope(target, sigma, a.tau_min, a.tau_max, opts);
    std::printf("%-10s %8.4f %12.6f %12.3e %14.6f\n", to_string(target).c_str(), sigma, e.slope,
                e.residual_rms, mu_chi_closed(sigma, conv));
    report.mu_estimates.push_back(e);
  }
  if (!c.out.empty()) {
    const ReportFormat f = format_or(c.format, c.out, ReportFormat::csv);
    report.timestamp = utc_timestamp();
    emit(f == ReportFormat::csv ? render_mu_csv(report.mu_estimates) : render_report(report, f), c.out);
  }
  return 0;
}

struct MomentArgs {
  int k = 1;
  double T = 100.0;
  double step = 0.05;
};

int run_moment(const MomentArgs& a, const Common& c) {
  const MomentResult m = moment_integral(a.k, a.T, a.step, c.workers);
  std::printf("k: %d\nT: %s\nnormalized_moment: %s\nquadrature_err: %.3e\n", m.k,
              fixed(m.T).c_str(), fixed(m.normalized_moment).c_str(), m.quadrature_err);
  if (m.k == 1) {
    const double lead = std::log(m.T / kTwoPi) + 2.0 * kEulerGamma - 1.0;
    std::printf("leading_term: %s\nratio: %s\n", fixed(lead).c_str(),
                fixed(m.normalized_moment / lead).c_str());
  }
  return 0;
}

struct MellinArgs {
  std::string which = "lambda";
  std::string xs = "0.3,0.5,1,2";
  std::optional<double> c;
  double T = 400.0;
  int panels = 8;
  int windows = 6;
  double tolerance = 1e-3;
};

int run_mellin(const MellinArgs& a, const Common& common) {
  const bool lambda = a.which == "lambda";
  if (!lambda && a.which != "reciprocal") throw UsageError("mellin integral must be lambda or reciprocal");
  ContourSpec spec = lambda ? lambda_contour() : reciprocal_contour();
  if (a.c) spec.c = *a.c;
  spec.T = a.T;
  spec.panels = a.panels;
  spec.averaging_windows = a.windows;
  spec.tolerance = a.tolerance;
  std::vector<std::pair<double, Evaluation>> rows;
  for (double x : parse_list(a.xs)) {
    rows.emplace_back(x, lambda ? inverse_mellin_lambda(x, spec) : inverse_mellin_reciprocal(x, spec));
  }
  std::string csv = "x,value_re,value_im,target,abs_err\n";
  std::printf("%10s %20s %20s %12s %12s\n", "x", "value", "target", "|diff|", "abs_err");
  for (const auto& [x, e] : rows) {
    const double target = lambda ? 2.0 * std::cos(kTwoPi * x) : 2.0 / x * std::cos(kTwoPi / x);
    std::printf("%10.6f %20.12f %20.12f %12.3e %12.3e\n", x, e.value.real(), target,
                std::abs(e.value - target), e.abs_err);
    char row[256];
    std::snprintf(row, sizeof row, "%.17g,%.17g,%.17g,%.17g,%.17g\n", x, e.value.real(),
                  e.value.imag(), target, e.abs_err);
    csv += row;
  }
  if (!common.out.empty()) emit(csv, common.out);
  return 0;
}

int run_report(const std::string& in, const Common& c) {
  const SuiteReport report = read_report_json(in);
  emit(render_report(report, format_or(c.format, c.out, ReportFormat::markdown)), c.out);
  return report.all_pass() ? 0 : kExitFail;
}

// --- config and environment --------------------------------------------------

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Inserts "--key value" for config keys and $LINDELOF_LAB_WORKERS when the
// command line does not already set them.
void apply_defaults(std::vector<std::string>& args, CLI::App& app) {
  std::size_t pos = 0;
  CLI::App* sub = nullptr;
  for (std::size_t i = 1; i < args.size() && !sub; ++i) {
    for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) {
      if (s->get_name() == args[i]) {
        sub = s;
        pos = i;
        break;
      }
    }
  }
  if (!sub) return;
  std::vector<std::string> extra;
  std::string config;
  for (std::size_t i = pos + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config = args[i].substr(9);
  }
  if (!config.empty()) {
    std::map<std::string, std::string> entries;
    try {
      entries = read_config_file(config);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    for (const auto& [key, value] : entries) {
      const std::string flag = "--" + key;
      if (key == "config") throw UsageError("config files can not include another config");
      if (!sub->get_option_no_throw(flag)) {
        bool known = false;
        for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) {
          known = known || s->get_option_no_throw(flag) != nullptr;
        }
        if (!known) throw UsageError("unknown config key '" + key + "'");
        continue;
      }
      if (!has_flag(args, flag)) {
        extra.push_back(flag);
        extra.push_back(value);
      }
    }
  }
  const char* env = std::getenv("LINDELOF_LAB_WORKERS");
  if (env && *env && !has_flag(args, "--workers") && !has_flag(extra, "--workers")) {
    extra.push_back("--workers");
    extra.push_back(env);
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(pos) + 1, extra.begin(), extra.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerics of the chi factor, zeta and the Lindelof mu function", "lindelof-lab"};
  app.set_version_flag("--version", std::string("lindelof-lab ") + kToolVersion);
  app.require_subcommand(1);

  Common common;

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate zeta, gamma, chi, chi_k or L at s");
  eval->add_option("function", eval_args.function, "zeta, gamma, chi, chi_k or L")
      ->required()
      ->check(CLI::IsMember({"zeta", "gamma", "chi", "chi_k", "L"}));
  eval->add_option("s", eval_args.s, "argument, e.g. 0.5+14i")->required()->allow_extra_args(false);
  eval->add_option("--k", eval_args.k, "modulus for chi_k and L");
  add_common(eval, common);

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "sweep the check registry over a grid");
  bounds->add_option("--sigma-min", bounds_args.grid.sigma_min, "lowest sigma");
  bounds->add_option("--sigma-max", bounds_args.grid.sigma_max, "highest sigma");
  bounds->add_option("--sigma-steps", bounds_args.grid.sigma_steps, "sigma grid points");
  bounds->add_option("--tau-min", bounds_args.grid.tau_min, "lowest tau");
  bounds->add_option("--tau-max", bounds_args.grid.tau_max, "highest tau");
  bounds->add_option("--tau-steps", bounds_args.grid.tau_steps, "tau grid points");
  bounds->add_option("--tau-scale", bounds_args.tau_scale, "linear or geometric");
  bounds->add_option("--checks", bounds_args.checks, "comma list of check IDs or 'all'");
  bounds->add_option("--random-samples", bounds_args.random_samples, "extra random points");
  add_common(bounds, common);

  MuArgs mu_args;
  auto* mu = app.add_subcommand("mu", "estimate growth exponents from window maxima");
  mu->add_option("--target", mu_args.target, "zeta, chi or chi_k:<k>");
  mu->add_option("--sigma", mu_args.sigmas, "comma list of abscissae");
  mu->add_option("--tau-min", mu_args.tau_min, "start of the fit range");
  mu->add_option("--tau-max", mu_args.tau_max, "end of the fit range, <= 1e4");
  mu->add_option("--windows", mu_args.windows, "geometric windows, >= 4");
  mu->add_option("--max-step", mu_args.max_step, "largest sampling step");
  add_common(mu, common);

  MomentArgs moment_args;
  auto* moment = app.add_subcommand("moment", "normalized 2k-th moment of zeta on the critical line");
  moment->add_option("--k", moment_args.k, "1 or 2");
  moment->add_option("--T", moment_args.T, "upper limit");
  moment->add_option("--step", moment_args.step, "quadrature step, <= 0.05");
  add_common(moment, common);

  MellinArgs mellin_args;
  auto* mellin = app.add_subcommand("mellin", "recover lambda(x) from its inverse Mellin integral");
  mellin->add_option("which", mellin_args.which, "lambda or reciprocal")
      ->check(CLI::IsMember({"lambda", "reciprocal"}));
  mellin->add_option("--x", mellin_args.xs, "comma list of x");
  mellin->add_option("--c", mellin_args.c, "abscissa of the line");
  mellin->add_option("--T", mellin_args.T, "truncation height");
  mellin->add_option("--panels", mellin_args.panels, "panels per unit tau");
  mellin->add_option("--windows", mellin_args.windows, "averaging windows");
  mellin->add_option("--tolerance", mellin_args.tolerance, "window spread tolerance");
  add_common(mellin, common);

  std::string report_in;
  auto* report = app.add_subcommand("report", "re-render a JSON report");
  report->add_option("--in", report_in, "JSON report")->required();
  add_common(report, common);

  std::vector<std::string> args(argv, argv + argc);
  try {
    apply_defaults(args, app);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) return run_eval(eval_args);
    if (*bounds) return run_bounds(bounds_args, common);
    if (*mu) return run_mu(mu_args, common);
    if (*moment) return run_moment(moment_args, common);
    if (*mellin) return run_mellin(mellin_args, common);
    if (*report) return run_report(report_in, common);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", e.kind(), e.what());
    return kExitFail;
  }
  return kExitUsage;
}
