#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmqkit {

/// A single axiom failure. `witness` holds the offending element indices
/// (unused slots are -1); `detail` is a human-readable explanation.
struct Violation {
  std::string axiom;
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
};

/// Outcome of an exhaustive table validation. At most one violation is
/// recorded per axiom id, with the lexicographically smallest witness.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Thrown when an enumeration would exceed its configured state budget.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

}  // namespace pmqkit
