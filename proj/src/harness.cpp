#include "lindelof/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "lindelof/errors.hpp"
#include "lindelof/parallel.hpp"

namespace lindelof {

namespace {

using Json = nlohmann::json;

constexpr double kMaxGridTau = 1e4;
constexpr int kMarkdownRows = 10;

bool in_strip(Complex s) { return s.real() >= 0.0 && s.real() <= 0.5; }

std::vector<double> axis(double lo, double hi, int steps, bool geometric) {
  if (lo == hi) return {lo};
  std::vector<double> out(steps);
  const double span = geometric ? std::log(hi / lo) : hi - lo;
  for (int i = 0; i < steps; ++i) {
    const double f = static_cast<double>(i) / (steps - 1);
    out[i] = geometric ? lo * std::exp(span * f) : lo + span * f;
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double read_number(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

Json record_json(const BoundRecord& r) {
  return Json{{"check_id", r.check_id}, {"sigma", number(r.s.real())}, {"tau", number(r.s.imag())},
              {"lhs", number(r.lhs)},     {"rhs", number(r.rhs)},        {"margin", number(r.margin)},
              {"tolerance", number(r.tolerance)}, {"pass", r.pass},      {"reason", r.reason}};
}

std::string render_json(const SuiteReport& report) {
  Json j;
  j["tool_version"] = report.tool_version;
  j["timestamp"] = report.timestamp;
  j["config"] = Json::object();
  for (const auto& [k, v] : report.config_echo) j["config"][k] = v;
  j["records"] = Json::array();
  for (const auto& r : report.records) j["records"].push_back(record_json(r));
  j["summaries"] = Json::array();
  for (const auto& s : report.summaries) {
    j["summaries"].push_back(Json{{"check_id", s.check_id},
                                  {"count", s.count},
                                  {"failures", s.failures},
                                  {"worst_margin", number(s.worst_margin)},
                                  {"worst_sigma", number(s.worst_sigma)},
                                  {"worst_tau", number(s.worst_tau)}});
  }
  j["mu_estimates"] = Json::array();
  for (const auto& m : report.mu_estimates) {
    Json windows = Json::array();
    for (const auto& [mid, max] : m.window_maxima) windows.push_back(Json{number(mid), number(max)});
    j["mu_estimates"].push_back(Json{{"target", to_string(m.target)},
                                     {"sigma", number(m.sigma)},
                                     {"window_maxima", windows},
                                     {"slope", number(m.slope)},
                                     {"residual_rms", number(m.residual_rms)}});
  }
  j["statistics"] = Json::object();
  for (const auto& [k, v] : report.statistics) j["statistics"][k] = number(v);
  return j.dump(2) + "\n";
}

std::string render_csv(const SuiteReport& report) {
  std::string out = "check_id,sigma,tau,lhs,rhs,margin,pass\n";
  for (const auto& r : report.records) {
    out += r.check_id + "," + format_double(r.s.real()) + "," + format_double(r.s.imag()) + "," +
           format_double(r.lhs) + "," + format_double(r.rhs) + "," + format_double(r.margin) + "," +
           (r.pass ? "true" : "false") + "\n";
  }
  return out;
}

std::string statement_of(const std::string& id) {
  for (const auto& c : check_registry()) {
    if (c.id == id) return c.statement;
  }
  return "";
}

std::string render_markdown(const SuiteReport& report) {
  std::ostringstream out;
  out << "# lindelof-lab report\n\n";
  out << "- tool version: " << report.tool_version << "\n";
  if (!report.timestamp.empty()) out << "- generated: " << report.timestamp << "\n";
  std::size_t failures = 0;
  for (const auto& s : report.summaries) failures += s.failures;
  out << "- records: " << report.records.size() << ", failures: " << failures << "\n";
  for (const auto& [k, v] : report.statistics) out << "- " << k << ": " << short_double(v) << "\n";
  out << "\n";
  if (!report.summaries.empty()) {
    out << "| check | records | failures | worst margin | at sigma | at tau |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const auto& s : report.summaries) {
      out << "| " << s.check_id << " | " << s.count << " | " << s.failures << " | "
          << short_double(s.worst_margin) << " | " << short_double(s.worst_sigma) << " | "
          << short_double(s.worst_tau) << " |\n";
    }
    out << "\n";
  }
  for (const auto& s : report.summaries) {
    out << "## " << s.check_id << "\n\n";
    const std::string statement = statement_of(s.check_id);
    if (!statement.empty()) out << statement << "\n\n";
    out << "Failures: " << s.failures << " of " << s.count << ".\n\n";
    std::vector<const BoundRecord*> rows;
    for (const auto& r : report.records) {
      if (r.check_id == s.check_id) rows.push_back(&r);
    }
    // Failed rows first, then the smallest margins.
    std::stable_sort(rows.begin(), rows.end(), [](const BoundRecord* a, const BoundRecord* b) {
      if (a->pass != b->pass) return !a->pass;
      const double ma = std::isnan(a->margin) ? -INFINITY : a->margin;
      const double mb = std::isnan(b->margin) ? -INFINITY : b->margin;
      return ma < mb;
    });
    if (rows.size() > kMarkdownRows) rows.resize(kMarkdownRows);
    out << "| sigma | tau | lhs | rhs | margin | pass | reason |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const BoundRecord* r : rows) {
      out << "| " << short_double(r->s.real()) << " | " << short_double(r->s.imag()) << " | "
          << short_double(r->lhs) << " | " << short_double(r->rhs) << " | "
          << short_double(r->margin) << " | " << (r->pass ? "yes" : "no") << " | " << r->reason
          << " |\n";
    }
    out << "\n";
  }
  if (!report.mu_estimates.empty()) {
    out << "## mu estimates\n\n| target | sigma | slope | residual rms |\n|---|---|---|---|\n";
    for (const auto& m : report.mu_estimates) {
      out << "| " << to_string(m.target) << " | " << short_double(m.sigma) << " | "
          << short_double(m.slope) << " | " << short_double(m.residual_rms) << " |\n";
    }
    out << "\n";
  }
  return out.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void GridSpec::validate() const {
  const double v[] = {sigma_min, sigma_max, tau_min, tau_max};
  for (double x : v) {
    if (!std::isfinite(x)) throw DomainError("grid bounds must be finite");
  }
  if (sigma_min > sigma_max) throw DomainError("grid needs sigma_min <= sigma_max");
  if (!(tau_min > 0.0 && tau_min <= tau_max && tau_max <= kMaxGridTau)) {
    throw DomainError("grid needs 0 < tau_min <= tau_max <= 1e4");
  }
  if (sigma_steps < 1 || tau_steps < 1) throw DomainError("grid steps must be positive");
  if ((sigma_min < sigma_max && sigma_steps < 2) || (tau_min < tau_max && tau_steps < 2)) {
    throw DomainError("a grid axis with min < max needs at least 2 steps");
  }
}

std::vector<double> GridSpec::sigmas() const {
  return axis(sigma_min, sigma_max, sigma_steps, false);
}

std::vector<double> GridSpec::taus() const {
  return axis(tau_min, tau_max, tau_steps, tau_scale == TauScale::geometric);
}

TauScale parse_tau_scale(const std::string& text) {
  if (text == "linear") return TauScale::linear;
  if (text == "geometric") return TauScale::geometric;
  throw DomainError("tau scale must be linear or geometric, not '" + text + "'");
}

std::string to_string(TauScale scale) {
  return scale == TauScale::linear ? "linear" : "geometric";
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry{
      {"sharp-imag-axis", "|chi(i tau)| <= sqrt(|tau| / 2pi) on sigma = 0", CheckScope::point},
      {"critical-line-modulus", "|chi(1/2 + i tau)| = 1 within 1e-9", CheckScope::point},
      {"affine-exponent", "|chi| <= 8 |tau|^(1/2 - sigma) with the affine exponent, 0 <= sigma <= 1/2",
       CheckScope::point},
      {"asymptotic-ratio", "|chi| / (|tau| / 2pi)^(1/2 - sigma) = 1 within 1e-2 for |tau| >= 50",
       CheckScope::point},
      {"reflection-identity", "|chi(s) chi(1 - s) - 1| <= 1e-9", CheckScope::point},
      {"mirror-symmetry", "|chi(sigma + i tau)| = |chi(sigma - i tau)|", CheckScope::point},
      {"A5-majorant", "|Gamma(1 - s) sin(pi s / 2)| <= 2 sqrt(2pi) |1 - s|^(1/2 - sigma), |tau| >= 1",
       CheckScope::point},
      {"A9-majorant", "|1 - s|^(1/2 - sigma) <= 2 |tau|^(1/2 - sigma), |tau| >= 1", CheckScope::point},
      {"K8-strip", "|chi| <= 8 |tau|^(1/2 - sigma) on 0 <= sigma <= 1/2, |tau| >= 1",
       CheckScope::point},
      {"K8-global", "|chi| <= max(8 |tau|^(1/2 - sigma), 8) on 0 <= sigma <= 1/2", CheckScope::point},
      {"heaviside-partition", "H(sigma - 1/2) + H(1/2 - sigma) = 1, or 2 c0 at sigma = 1/2",
       CheckScope::sigma},
      {"mu-closed-form", "(1/2 - sigma) H(1/2 - sigma) = max(1/2 - sigma, 0)", CheckScope::sigma},
      {"mu-functional-eq", "mu(sigma) - mu(1 - sigma) = 1/2 - sigma within 1e-15", CheckScope::sigma},
      {"chik-asymptotic",
       "|chi_k| / ((k / 2pi)^(1/2 - sigma) |tau|^(1/2 - sigma)) = 1 within 1e-2, k in {5, 8, 12}",
       CheckScope::point},
      {"Lk-functional-eq", "|L(s) - chi_k(s) L(1 - s)| <= 1e-8 max(1, |L(s)|), k in {5, 8, 12}",
       CheckScope::point},
  };
  return registry;
}

bool is_registered_check(const std::string& id) {
  const auto& reg = check_registry();
  return std::any_of(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.id == id; });
}

std::vector<std::string> parse_check_list(const std::string& text) {
  const std::string all = trim(text);
  if (all == "all") {
    std::vector<std::string> ids;
    for (const auto& c : check_registry()) ids.push_back(c.id);
    return ids;
  }
  std::vector<std::string> ids;
  std::stringstream in(all);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (!is_registered_check(item)) throw DomainError("unknown check '" + item + "'");
    if (std::find(ids.begin(), ids.end(), item) == ids.end()) ids.push_back(item);
  }
  if (ids.empty()) throw DomainError("the check set is empty");
  return ids;
}

bool check_applies(const std::string& id, Complex s) {
  const double sigma = s.real();
  const double tau = std::abs(s.imag());
  if (id == "sharp-imag-axis") return sigma == 0.0 && tau != 0.0;
  if (id == "critical-line-modulus") return sigma == 0.5;
  if (id == "affine-exponent") return in_strip(s) && tau != 0.0;
  if (id == "asymptotic-ratio" || id == "chik-asymptotic") return tau >= kAsymptoticMinTau;
  if (id == "reflection-identity" || id == "mirror-symmetry") return true;
  if (id == "A5-majorant" || id == "A9-majorant" || id == "K8-strip") {
    return in_strip(s) && tau >= 1.0;
  }
  if (id == "K8-global") return in_strip(s);
  if (id == "heaviside-partition" || id == "mu-closed-form" || id == "mu-functional-eq") return true;
  if (id == "Lk-functional-eq") {
    return sigma > -1.0 && sigma < 2.0 && tau <= 1e3 && std::abs(s - 1.0) >= 1e-3 &&
           std::abs(s) >= 1e-3;
  }
  return false;
}

BoundRecord evaluate_check(const std::string& id, Complex s, const HeavisideConvention& conv) {
  try {
    if (id == "sharp-imag-axis") return check_sharp_imag_axis(s);
    if (id == "critical-line-modulus") return check_critical_line_modulus(s);
    if (id == "affine-exponent") return check_affine_exponent(s);
    if (id == "asymptotic-ratio") return check_asymptotic_ratio(s);
    if (id == "reflection-identity") return check_reflection_identity(s);
    if (id == "mirror-symmetry") return check_mirror_symmetry(s);
    if (id == "A5-majorant") return check_a5_majorant(s);
    if (id == "A9-majorant") return check_a9_majorant(s);
    if (id == "K8-strip") return check_k8_strip(s);
    if (id == "K8-global") return check_k8_global(s);
    if (id == "heaviside-partition") return check_heaviside_partition(s, conv);
    if (id == "mu-closed-form") return check_mu_closed_form(s, conv);
    if (id == "mu-functional-eq") return check_mu_functional_eq(s, conv);
    if (id == "chik-asymptotic") return check_chik_asymptotic(s);
    if (id == "Lk-functional-eq") return check_lk_functional_eq(s);
  } catch (const Error& e) {
    return failed_record(id, s, std::string(e.kind()) + ": " + e.what());
  } catch (const std::exception& e) {
    return failed_record(id, s, e.what());
  }
  return failed_record(id, s, "unknown check");
}

bool SuiteReport::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const BoundRecord& r) { return r.pass; });
}

std::vector<CheckSummary> summarize(const std::vector<BoundRecord>& records) {
  std::vector<CheckSummary> out;
  for (const auto& info : check_registry()) {
    CheckSummary s;
    s.check_id = info.id;
    bool first = true;
    for (const auto& r : records) {
      if (r.check_id != info.id) continue;
      ++s.count;
      if (!r.pass) ++s.failures;
      const double m = std::isnan(r.margin) ? -INFINITY : r.margin;
      const double w = std::isnan(s.worst_margin) ? -INFINITY : s.worst_margin;
      if (first || m < w) {
        s.worst_margin = r.margin;
        s.worst_sigma = r.s.real();
        s.worst_tau = r.s.imag();
        first = false;
      }
    }
    if (s.count > 0) out.push_back(s);
  }
  return out;
}

SuiteReport run_bounds_suite(const GridSpec& grid, const std::vector<std::string>& checks,
                             const HeavisideConvention& conv, const SweepOptions& opts) {
  grid.validate();
  conv.validate();
  if (checks.empty()) throw DomainError("the check set is empty");
  for (const auto& id : checks) {
    if (!is_registered_check(id)) throw DomainError("unknown check '" + id + "'");
  }
  if (opts.random_samples < 0) throw DomainError("random sample count must be >= 0");

  const std::vector<double> sigmas = grid.sigmas();
  const std::vector<double> taus = grid.taus();
  struct Point {
    Complex s;
    bool first_tau;
  };
  std::vector<Point> points;
  for (double sigma : sigmas) {
    for (std::size_t j = 0; j < taus.size(); ++j) points.push_back({{sigma, taus[j]}, j == 0});
  }
  std::uint64_t state = opts.seed;
  const double log_span = std::log(grid.tau_max / grid.tau_min);
  for (int i = 0; i < opts.random_samples; ++i) {
    const double sigma = grid.sigma_min + (grid.sigma_max - grid.sigma_min) * unit_uniform(state);
    const double tau = grid.tau_min * std::exp(log_span * unit_uniform(state));
    points.push_back({{sigma, tau}, false});
  }

  std::vector<CheckScope> scopes;
  for (const auto& id : checks) {
    for (const auto& c : check_registry()) {
      if (c.id == id) scopes.push_back(c.scope);
    }
  }

  std::vector<std::vector<BoundRecord>> per_point(points.size());
  parallel_for(points.size(), opts.workers, [&](std::size_t i) {
    const Point& p = points[i];
    for (std::size_t c = 0; c < checks.size(); ++c) {
      if (scopes[c] == CheckScope::sigma && !p.first_tau) continue;
      if (!check_applies(checks[c], p.s)) continue;
      per_point[i].push_back(evaluate_check(checks[c], p.s, conv));
    }
  });

  SuiteReport report;
  for (auto& recs : per_point) {
    for (auto& r : recs) report.records.push_back(std::move(r));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const BoundRecord& a, const BoundRecord& b) {
                     if (a.check_id != b.check_id) return a.check_id < b.check_id;
                     if (a.s.real() != b.s.real()) return a.s.real() < b.s.real();
                     return a.s.imag() < b.s.imag();
                   });
  report.summaries = summarize(report.records);

  double sup_ratio = -INFINITY;
  double worst_unit = -INFINITY;
  for (const auto& r : report.records) {
    if (!std::isfinite(r.lhs) || !std::isfinite(r.rhs)) continue;
    if (r.check_id == "K8-strip") sup_ratio = std::max(sup_ratio, r.lhs / (r.rhs / kK8));
    if (r.check_id == "critical-line-modulus") worst_unit = std::max(worst_unit, std::abs(r.lhs - 1.0));
  }
  if (std::isfinite(sup_ratio)) report.statistics["sup_chi_over_tau_power"] = sup_ratio;
  if (std::isfinite(worst_unit)) report.statistics["max_critical_line_deviation"] = worst_unit;

  auto& echo = report.config_echo;
  echo["sigma_min"] = format_double(grid.sigma_min);
  echo["sigma_max"] = format_double(grid.sigma_max);
  echo["sigma_steps"] = std::to_string(grid.sigma_steps);
  echo["tau_min"] = format_double(grid.tau_min);
  echo["tau_max"] = format_double(grid.tau_max);
  echo["tau_steps"] = std::to_string(grid.tau_steps);
  echo["tau_scale"] = to_string(grid.tau_scale);
  echo["c0"] = format_double(conv.c0);
  echo["random_samples"] = std::to_string(opts.random_samples);
  echo["seed"] = std::to_string(opts.seed);
  std::string joined;
  for (const auto& id : checks) joined += (joined.empty() ? "" : ",") + id;
  echo["checks"] = joined;
  report.timestamp = utc_timestamp();
  return report;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "markdown" || text == "md") return ReportFormat::markdown;
  throw DomainError("report format must be json, csv or markdown, not '" + text + "'");
}

std::string render_report(const SuiteReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return render_json(report);
    case ReportFormat::csv:
      return render_csv(report);
    case ReportFormat::markdown:
      return render_markdown(report);
  }
  return "";
}

void write_report(const SuiteReport& report, ReportFormat format, const std::string& path) {
  const std::string text = render_report(report, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("can not open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IOError("failed writing '" + path + "'");
}

SuiteReport parse_report_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed report JSON: ") + e.what());
  }
  SuiteReport report;
  try {
    report.tool_version = j.at("tool_version").get<std::string>();
    report.timestamp = j.value("timestamp", "");
    for (const auto& [k, v] : j.at("config").items()) report.config_echo[k] = v.get<std::string>();
    for (const auto& r : j.at("records")) {
      BoundRecord rec;
      rec.check_id = r.at("check_id").get<std::string>();
      rec.s = Complex(read_number(r.at("sigma")), read_number(r.at("tau")));
      rec.lhs = read_number(r.at("lhs"));
      rec.rhs = read_number(r.at("rhs"));
      rec.margin = read_number(r.at("margin"));
      rec.tolerance = read_number(r.at("tolerance"));
      rec.pass = r.at("pass").get<bool>();
      rec.reason = r.value("reason", "");
      report.records.push_back(std::move(rec));
    }
    for (const auto& s : j.at("summaries")) {
      CheckSummary sum;
      sum.check_id = s.at("check_id").get<std::string>();
      sum.count = s.at("count").get<std::size_t>();
      sum.failures = s.at("failures").get<std::size_t>();
      sum.worst_margin = read_number(s.at("worst_margin"));
      sum.worst_sigma = read_number(s.at("worst_sigma"));
      sum.worst_tau = read_number(s.at("worst_tau"));
      report.summaries.push_back(std::move(sum));
    }
    for (const auto& m : j.value("mu_estimates", Json::array())) {
      MuEstimate est;
      est.target = parse_mu_target(m.at("target").get<std::string>());
      est.sigma = read_number(m.at("sigma"));
      for (const auto& w : m.at("window_maxima")) {
        est.window_maxima.emplace_back(read_number(w.at(0)), read_number(w.at(1)));
      }
      est.slope = read_number(m.at("slope"));
      est.residual_rms = read_number(m.at("residual_rms"));
      report.mu_estimates.push_back(std::move(est));
    }
    const Json stats = j.value("statistics", Json::object());
    for (const auto& [k, v] : stats.items()) {
      report.statistics[k] = read_number(v);
    }
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed report JSON: ") + e.what());
  }
  return report;
}

SuiteReport read_report_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("can not read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_report_json(buf.str());
}

std::string render_mu_csv(const std::vector<MuEstimate>& estimates) {
  std::string out = "target,sigma,tau_mid,window_max,slope,residual_rms\n";
  for (const auto& m : estimates) {
    for (const auto& [mid, max] : m.window_maxima) {
      out += to_string(m.target) + "," + format_double(m.sigma) + "," + format_double(mid) + "," +
             format_double(max) + "," + format_double(m.slope) + "," +
             format_double(m.residual_rms) + "\n";
    }
  }
  return out;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key.find_first_of(" \t[]") != std::string::npos) {
      throw DomainError("config line " + std::to_string(number) + ": bad key '" + key + "'");
    }
    if (!out.emplace(key, value).second) {
      throw DomainError("config line " + std::to_string(number) + ": repeated key '" + key + "'");
    }
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("can not read config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace lindelof
