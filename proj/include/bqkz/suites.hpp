#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bqkz/report.hpp"

namespace bqkz {

/// Run parameters shared by all suites; a negative bound selects the suite default.
struct SuiteConfig {
  int max_sites = -1;
  std::uint64_t seed = 7;
  int trials = 5;
  /// 0 runs both signs of betabar where the suite supports it.
  int betabar_sign = 0;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  int default_max;
  std::function<Report(const SuiteConfig&, int max_sites)> run;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);

/// Runs one suite by name; "all" runs every registered suite and merges the results.
Report run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace bqkz
