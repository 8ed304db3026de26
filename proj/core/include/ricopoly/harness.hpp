#pragma once

// Batch entry points shared by the command-line tool and the acceptance
// tests: regeneration of the five published zero tables against embedded
// golden values, and the per-module identity suites over the builtin
// families.

#include <string>
#include <vector>

namespace ricopoly {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0;  // 0 for identities verified exactly
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;
  // (series label, x) rows; tables expose their zero columns here so the
  // published point plots can be regenerated from the CSV form.
  std::vector<std::pair<std::string, double>> series;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  double max_residual() const {
    double m = 0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }

  std::string to_json() const;
  std::string to_csv() const;
};

// id in {T1..T5}; golden values are compared at 1e-6 absolute.
Report run_table(const std::string& id);

// name in {representation, transfer, stieltjes, toda, chain}.
Report run_suite(const std::string& name);

}  // namespace ricopoly
