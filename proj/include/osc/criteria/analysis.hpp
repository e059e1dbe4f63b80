#pragma once

#include <string>
#include <vector>

#include "osc/criteria/tests.hpp"

namespace osc {

struct AnalysisResult {
  HypothesisReport hypotheses;
  std::vector<CriterionOutcome> outcomes;  // fixed order: T2.3, T2.4/T2.5 by level, T3.3, T3.4, baselines
  bool proven = false;
  std::vector<std::string> proven_by;
  int r_reached = 0;
  long horizon_used = 0;
  std::vector<std::string> notes;
};

/// Smallest horizon giving every window up to level r_max two full periods.
long required_horizon(const EquationSpec& eq, int r_max);

/// Evaluates one criterion by identifier, e.g. "T2.4(3)", "T3.3a", "B-3.1".
/// std::invalid_argument for an unknown identifier or one that does not
/// match the equation kind.
CriterionOutcome evaluate_criterion(CriteriaContext& ctx, const std::string& id, const CriteriaOptions& opts);

/// Largest level r named by the identifiers (0 if none is iterative).
int max_level(const std::vector<std::string>& ids);

/// Runs every applicable criterion. The iterative tests scan r = 1..r_max and
/// stop once T2.4(r) or T2.5(r) is proven or the brackets stop changing.
AnalysisResult analyze(const EquationSpec& eq, const CriteriaOptions& opts = {});

}  // namespace osc
