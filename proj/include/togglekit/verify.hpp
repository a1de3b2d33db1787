#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace togglekit {

struct VerifyOptions {
  int trials{200};
  std::uint64_t seed{1};
  int r{3};
  int s{3};
};

struct VerifyResult {
  std::string property;
  VerifyOptions options;
  int trials_run{0};
  bool ok{true};
  std::string failure_message;               // empty when ok
  nlohmann::json counterexample;             // minimal failing input(s)
  std::vector<std::uint64_t> trial_seeds;    // split from the root seed, for replay
};

// Registered property suites (sorted). Each name matches one invariant
// family from the library; suites draw both realms per trial unless the
// property is PL-only (moon fillings, Ehrhart).
std::vector<std::string> verify_property_names();

// Runs `trials` seeded trials; stops at the first failure and captures the
// counterexample. Throws std::invalid_argument for unknown property names.
VerifyResult run_verify(const std::string& property, const VerifyOptions& opt);

nlohmann::json verify_result_to_json(const VerifyResult& res);

}  // namespace togglekit
