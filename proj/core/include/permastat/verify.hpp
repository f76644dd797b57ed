#pragma once

#include <string>
#include <vector>

namespace permastat {

/// Outcome of one verification check.  `seconds` is wall time; a check whose
/// runtime exceeds its budget fails even when the computation is correct.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

enum class VerifyLevel { Quick, Full };

/// The thirteen release-gate checks, in canonical order.  Every check is
/// self-contained and exact except the Monte Carlo sanity check, which is
/// statistical but deterministic under its fixed seed.
std::vector<CheckResult> run_acceptance();

/// Quick: a sub-minute subset (route equivalence on small shapes plus the
/// cheap identity and golden-value checks).  Full: run_acceptance() followed
/// by the principal-specialization closed-form survey.
std::vector<CheckResult> run_verification(VerifyLevel level);

} // namespace permastat
