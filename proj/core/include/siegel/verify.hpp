#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace siegel::verify {

struct VerifyConfig {
  std::uint64_t seed = 42;
  int samples = 500;
  double tol_scale = 1.0;  // multiplies every tolerance (diagnostic use)
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;   // observed worst value
  double bound = 0.0;   // tolerance or threshold
  std::string cmp;      // "<=" or ">="
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyReport {
  VerifyConfig cfg;
  std::vector<SuiteResult> suites;
  bool pass() const {
    for (const auto& s : suites)
      if (!s.pass()) return false;
    return true;
  }
  // Deterministic text rendering: a pure function of (cfg, results).
  std::string render() const;
  nlohmann::json to_json() const;
};

// Runs every module property suite. Deterministic for a fixed config.
VerifyReport run_verify(const VerifyConfig& cfg);

}  // namespace siegel::verify
