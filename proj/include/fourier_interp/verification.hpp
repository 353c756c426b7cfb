#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fourier_interp {

struct Check {
  std::string name;
  double measured;
  double threshold;
  bool passed;
  // "below": measured < threshold; "above": measured > threshold.
  std::string relation = "below";
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> info;

  bool passed() const;
  /// Name of the first failing check, empty if none.
  std::string first_failure() const;
  void expect_below(std::string name, double measured, double threshold);
  void expect_above(std::string name, double measured, double threshold);
  void note(std::string key, std::string value);
  void note(std::string key, double value);
};

struct SuiteOptions {
  std::uint64_t seed = 20240501;
  int truncation_N = 40;
  // Empty runs every lattice fixture the suite knows.
  std::string fixture;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

SuiteReport verify_theta(const SuiteOptions& opts = {});
SuiteReport verify_kernels(const SuiteOptions& opts = {});
SuiteReport verify_interpolation(const SuiteOptions& opts = {});
SuiteReport verify_poisson(const SuiteOptions& opts = {});
SuiteReport verify_lp(const SuiteOptions& opts = {});
SuiteReport verify_classical(const SuiteOptions& opts = {});

/// Deterministic JSON rendering of a report.
std::string report_json(const SuiteReport& report);

}  // namespace fourier_interp
