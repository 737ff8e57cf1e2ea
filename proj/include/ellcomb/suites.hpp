#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Seeded identity suites over every module, shared by the CLI check command
// and the acceptance runner.
namespace ellcomb {

using ParamRecord = std::vector<std::pair<std::string, std::string>>;

struct CheckFailure {
  long trial = 0;
  std::string check;
  double residual = 0.0;
  double tol = 0.0;
  ParamRecord record;
};

struct SuiteResult {
  std::string suite;
  long trials = 0;
  long trials_passed = 0;
  long checks = 0;
  long checks_failed = 0;
  double worst_residual = 0.0;
  std::vector<CheckFailure> failures;

  bool passed() const { return checks_failed == 0 && trials_passed == trials; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  long trials = 0;
  std::optional<double> tol;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

// Suite names in execution order, without "all".
const std::vector<std::string>& suite_names();

// Runs one suite or "all". Every check uses its own tolerance unless `tol`
// is given, in which case it replaces all of them. Suites run concurrently
// when `parallel` is set; the report does not depend on it.
SuiteReport run_check(const std::string& suite, long trials, std::uint64_t seed, std::optional<double> tol = {},
                      bool parallel = true);

// Plain-text report: one line per suite, then every failure with its record.
std::string render_report(const SuiteReport& report);

// Residuals are printed in this form everywhere, e.g. "3.125e-16".
std::string format_residual(double r);

}  // namespace ellcomb
