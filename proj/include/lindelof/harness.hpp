#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lindelof/chifn.hpp"
#include "lindelof/lindelof.hpp"

namespace lindelof {

inline constexpr const char* kToolVersion = "0.1.0";

enum class TauScale { linear, geometric };

struct GridSpec {
  double sigma_min = 0.0;
  double sigma_max = 0.5;
  int sigma_steps = 26;
  double tau_min = 1.0;
  double tau_max = 1000.0;
  TauScale tau_scale = TauScale::geometric;
  int tau_steps = 60;

  /// DomainError unless sigma_min <= sigma_max, 0 < tau_min <= tau_max <= 1e4,
  /// steps >= 1 and steps >= 2 whenever min < max.
  void validate() const;
  /// Grid values with exact endpoints; a degenerate axis yields one value.
  std::vector<double> sigmas() const;
  std::vector<double> taus() const;
};

TauScale parse_tau_scale(const std::string& text);
std::string to_string(TauScale scale);

enum class CheckScope {
  /// Evaluated at every point where it applies.
  point,
  /// Evaluated once per sigma, at the first tau of the grid.
  sigma,
};

struct CheckInfo {
  std::string id;
  std::string statement;
  CheckScope scope;
};

/// The built-in checks in documentation order.
const std::vector<CheckInfo>& check_registry();
bool is_registered_check(const std::string& id);

/// "all" or a comma list of IDs. DomainError on an unknown ID or an empty set.
std::vector<std::string> parse_check_list(const std::string& text);

/// Whether `id` makes a statement at s (0 <= sigma <= 1/2 strip limits etc.).
bool check_applies(const std::string& id, Complex s);

/// One record for `id` at s. Module errors become failed records.
BoundRecord evaluate_check(const std::string& id, Complex s, const HeavisideConvention& conv);

struct CheckSummary {
  std::string check_id;
  std::size_t count = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;
  double worst_sigma = 0.0;
  double worst_tau = 0.0;
};

struct SuiteReport {
  std::string tool_version = kToolVersion;
  std::map<std::string, std::string> config_echo;
  std::vector<BoundRecord> records;
  std::vector<CheckSummary> summaries;
  std::vector<MuEstimate> mu_estimates;
  std::map<std::string, double> statistics;
  std::string timestamp;

  bool all_pass() const;
};

struct SweepOptions {
  int workers = 1;
  /// Extra points drawn uniformly in sigma and log tau over the grid box.
  int random_samples = 0;
  std::uint64_t seed = 0;
};

/// Every selected check at every applicable grid point, records sorted by
/// (check_id, sigma, tau). DomainError on an invalid grid or empty check set.
SuiteReport run_bounds_suite(const GridSpec& grid, const std::vector<std::string>& checks,
                             const HeavisideConvention& conv, const SweepOptions& opts = {});

/// Per-check count, failures and worst margin in registry order.
std::vector<CheckSummary> summarize(const std::vector<BoundRecord>& records);

/// "2026-01-31T12:00:00Z".
std::string utc_timestamp();

enum class ReportFormat { json, csv, markdown };

ReportFormat parse_report_format(const std::string& text);

std::string render_report(const SuiteReport& report, ReportFormat format);
/// IOError naming the path when it can not be written.
void write_report(const SuiteReport& report, ReportFormat format, const std::string& path);
/// Reads a JSON report. IOError on unreadable files, DomainError on malformed ones.
SuiteReport read_report_json(const std::string& path);
SuiteReport parse_report_json(const std::string& text);

/// Plot-ready rows target,sigma,tau_mid,window_max,slope,residual_rms.
std::string render_mu_csv(const std::vector<MuEstimate>& estimates);

/// Flat "key = value" file; '#' and ';' start comments. IOError when the file
/// can not be read, DomainError on a malformed line or a repeated key.
std::map<std::string, std::string> read_config_file(const std::string& path);
std::map<std::string, std::string> parse_config_text(const std::string& text);

}  // namespace lindelof
