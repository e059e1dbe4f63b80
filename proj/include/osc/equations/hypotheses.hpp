#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osc/equations/equation.hpp"

namespace osc {

// Standing hypotheses of the oscillation tests, evaluated for one equation.
// For advanced equations the "unbounded"/"bounded" flags refer to
// sigma_i(n) >= n+1 and sigma_i(n) - n <= mu_i respectively.
struct HypothesisReport {
  EquationKind kind = EquationKind::Retarded;
  bool argument_limit = false;        // tau_i(n) -> infinity / sigma_i(n) >= n+1 for all n
  bool bounded_deviation = false;     // uniform bounds M_i / mu_i exist
  std::vector<std::optional<long>> deviation_bounds;  // M_i or mu_i
  std::optional<long> max_deviation_bound;            // M or mu
  bool coefficient_sum_below_one = false;             // sum_i p_i(n) < 1 on the horizon
  std::vector<long> sum_at_least_one;                 // indices with sum_i p_i(n) >= 1
  bool sum_at_least_one_infinitely = false;           // some such index in the periodic part
  std::vector<bool> monotone_arguments;               // per term, non-decreasing on horizon
  long initial_depth = 0;                             // w = -min tau_i(n), clamped at 0
  long terminal_depth = 0;                            // max sigma_i(n) - horizon, clamped at 0

  bool all_monotone() const;
  std::vector<std::string> warnings() const;
};

HypothesisReport check_hypotheses(const EquationSpec& eq);

}  // namespace osc
