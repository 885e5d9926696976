#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monhecke {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string witness;  // populated on failure (or informational)
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  std::optional<std::string> datum;      // restrict to one named datum / file
  std::optional<std::string> char_spec;  // restrict to one character
  std::optional<int> modulus;            // restrict Z/m sweeps to one m
  int bound = 6;
  std::uint64_t seed = 20250809;
};

// Suites: algebra, endoscopy-example, theta, canonical, ch-mult, blocks,
// forms, kl, all. Throws UnknownSuite for anything else.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

std::vector<std::string> suite_names();

}  // namespace monhecke
