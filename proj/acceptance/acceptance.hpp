#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hardy::acceptance {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
  std::string summary_line() const;  // one line, PASS or FAIL first
};

struct SuiteOptions {
  std::uint64_t seed = 20261015;
};

CriterionResult peak_system_criterion(const SuiteOptions& options);      // 1
CriterionResult drury_criterion(const SuiteOptions& options);            // 2
CriterionResult pick_criterion(const SuiteOptions& options);             // 3
CriterionResult carleson_criterion(const SuiteOptions& options);         // 4
CriterionResult riesz_criterion(const SuiteOptions& options);            // 5
CriterionResult paley_wiener_criterion(const SuiteOptions& options);     // 6
CriterionResult cantor_criterion(const SuiteOptions& options);           // 7
CriterionResult sidon_criterion(const SuiteOptions& options);            // 8
CriterionResult oracle_coherence_criterion(const SuiteOptions& options); // 9

// Runs 1..9 in order; `done` sees each result as soon as it is ready.
std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& done = {});

}  // namespace hardy::acceptance
