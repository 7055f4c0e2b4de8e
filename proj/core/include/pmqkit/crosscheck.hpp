#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmqkit/pair.hpp"

namespace pmqkit {

/// Outcome of one consistency check: status is "pass", "fail" or "skip".
struct CheckResult {
  std::string name;
  std::string status;
  std::string detail;
};

/// Runs every applicable cross-module consistency check within the state
/// budget. Checks that do not apply to the input (or would exceed the
/// budget) are reported as skipped, never as failures.
std::vector<CheckResult> crosscheck(const FinitePMQ& q,
                                    const std::optional<PMQGroupPair>& pair,
                                    std::uint64_t budget = kDefaultStateBudget);

/// Canonical run-report JSON for a crosscheck invocation. Byte-identical
/// across reruns of the same input and parameters; timing information is
/// deliberately not part of the document.
std::string crosscheck_report(const std::string& input_bytes, std::uint64_t budget,
                              const std::vector<CheckResult>& checks);

bool all_checks_pass(const std::vector<CheckResult>& checks);

}  // namespace pmqkit
