#pragma once

#include <superdom/report.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace superdom {

/// One acceptance criterion: a randomized property battery with a time budget.
struct Criterion {
  unsigned id;
  std::string title;
  double limit_seconds;
  std::function<CheckReport(std::uint64_t seed)> run;
};

const std::vector<Criterion>& acceptance_criteria();

struct CriterionOutcome {
  CheckReport report;
  double seconds = 0;
  bool passed = false;
};

/// Runs the battery; exceptions become failures, overrunning the budget fails.
CriterionOutcome run_criterion(const Criterion& c, std::uint64_t seed);

/// `PASS 3 Exact Taylor (1.20 s / 30 s): 412 checks` or a FAIL line with the first failure.
std::string outcome_line(const Criterion& c, const CriterionOutcome& o);

/// Runs the selected criteria (all when empty), one line each; true when all pass.
bool run_criteria(std::ostream& out, std::uint64_t seed, const std::vector<unsigned>& only = {});

}  // namespace superdom
