#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qalg {

struct CheckResult {
  std::string name;
  bool pass = false;
};

/// One named property suite's outcomes plus suite-specific JSON extras
/// (the rform suite attaches the solved generator pairing table).
struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  nlohmann::json extra = nlohmann::json::object();

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Suites: relations, hopf, coact, rform, coinv, embed, pi-cocomm, all.
/// Deterministic for a fixed seed. Unknown names raise bad_argument.
SuiteReport run_suite(const std::string& suite, int n, unsigned long seed);

std::vector<std::string> suite_names();

}  // namespace qalg
