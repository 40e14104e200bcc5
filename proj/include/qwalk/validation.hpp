#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk {

enum class ValidationScale { kFull, kQuick };

enum class CriterionStatus { kPass, kFail, kSkip };

struct CriterionInfo {
  int number;
  const char* group;
  const char* title;
  bool in_quick;  // runs under ValidationScale::kQuick
};

struct CriterionOutcome {
  int number = 0;
  CriterionStatus status = CriterionStatus::kSkip;
  double seconds = 0.0;
  std::vector<std::string> details;
};

// Criteria 1..11 in order.
const std::vector<CriterionInfo>& acceptance_criteria();

// Empty selector means all; otherwise a group name or a criterion number.
// Throws InvalidParameter for anything else.
std::vector<int> select_criteria(const std::string& only);

CriterionOutcome run_criterion(int number, ValidationScale scale);

// "PASS [n] group: title (s)" or FAIL / SKIP.
std::string outcome_line(const CriterionOutcome& outcome);

// Runs the selection, writing one status line per criterion followed by
// indented detail lines.
std::vector<CriterionOutcome> run_acceptance(const std::vector<int>& numbers, ValidationScale scale,
                                             std::ostream& out);

bool all_passed(const std::vector<CriterionOutcome>& outcomes);

}  // namespace qwalk
