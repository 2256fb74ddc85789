#pragma once

#include "jbt/truncation.hpp"

namespace jbt {

// Registered property suites behind `verify-lemmas`. Every check id is a
// stable string; reports are keyed by id so runs stay diffable.

struct SuiteConfig {
  std::vector<FactorDescriptor> factors = {FactorDescriptor::rect(2, 2),
                                           FactorDescriptor::sym(2),
                                           FactorDescriptor::spin(3)};
  long trials = 1000;  // per factor
  std::uint64_t seed = 42;
  Tolerance tol;
  std::vector<std::string> filter;  // check ids to run; empty = all
};

struct CheckResult {
  std::string id;
  long trials = 0;
  long failures = 0;
  double max_residual = 0.0;
  std::string note;  // first failure description

  bool pass() const { return failures == 0; }
};

std::vector<std::string> registered_check_ids();
std::vector<CheckResult> run_checks(const SuiteConfig& cfg);

}  // namespace jbt
