#include "pmqkit/validation.hpp"

#include <sstream>

namespace pmqkit {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const Violation& v = violations[i];
    if (i > 0) os << "; ";
    os << v.axiom << " at (";
    bool first = true;
    for (int w : v.witness) {
      if (w < 0) continue;
      if (!first) os << ",";
      os << w;
      first = false;
    }
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
  }
  return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(report.summary()), report_(std::move(report)) {}

BudgetExceededError::BudgetExceededError(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("state budget exceeded: need " + std::to_string(required) +
                         " states, budget " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace pmqkit
