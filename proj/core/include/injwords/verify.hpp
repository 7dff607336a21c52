#pragma once

#include <string>
#include <vector>

#include "injwords/ints.hpp"
#include "injwords/poset.hpp"

namespace injwords {

enum class CheckStatus { pass, fail, skipped };

std::string status_name(CheckStatus s);

// One verified identity instance. expected/actual are rendered values,
// filled on pass and fail alike (skipped records carry the reason in
// detail instead).
struct CheckRecord {
  std::string suite;
  std::string name;      // the specific instance, e.g. "S={1,3}"
  std::string identity;  // human-readable statement of the law checked
  std::string expected;
  std::string actual;
  std::string detail;
  CheckStatus status = CheckStatus::pass;
};

struct Report {
  int n = 0;
  int r = 1;
  std::vector<CheckRecord> records;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool all_passed() const { return failed() == 0; }
};

struct VerifyConfig {
  int n = 3;
  int r = 1;
  std::vector<std::string> suites = {"all"};
  Int budget = InjectiveWordPoset::default_budget();
  int jobs = 1;
};

// Known suite names, in canonical run order.
const std::vector<std::string>& verification_suite_names();

// Expands a selector ("all", a group name, a suite name, or a
// comma-separated mix) to suite names in canonical order. Throws
// std::invalid_argument on unknown selectors. Groups:
//   all        every suite
//   identities agood, blambdacolor, betacolortrivial, derangement
//   oracle     oracle-vs-tau, oracle-vs-closed-form, agood
std::vector<std::string> expand_suites(const std::vector<std::string>& selectors);

// Runs the selected suites at the configured size. Checks whose
// enumeration would exceed the budget come back skipped, not failed.
Report run_verification(const VerifyConfig& config);

}  // namespace injwords
