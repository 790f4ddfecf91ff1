#pragma once

// The acceptance criteria as runnable checks: one result per criterion with
// the measured and expected values.

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace circstab::cli {

enum class CriterionStatus { pass, fail, not_run, reference_match, reference_differs };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool required = true;
  CriterionStatus status = CriterionStatus::not_run;
  std::string measured;
  std::string expected;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  unsigned workers = 1;
  /// Run criterion 3 (orders 39..50); hours of work, resumable through the cache.
  bool extended = false;
  std::filesystem::path cache_dir;
  /// Called as soon as each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// `[PASS] 1 census total ... measured=... expected=... (1.2 s)`
std::string format_result(const CriterionResult& r);

bool all_required_pass(const std::vector<CriterionResult>& results);

}  // namespace circstab::cli
