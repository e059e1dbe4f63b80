#pragma once

/**
 * @file sums.hpp
 * @brief Windowed evaluation of the limsup sums of the iterative tests.
 *
 * Retarded: S_r(n) = sum_{j=phi(n)}^{n} sum_i p_i(j) / a_r(phi(n), tau_i(j))
 * Advanced: S_r(n) = sum_{j=n}^{rho(n)} sum_i p_i(j) / b_r(rho(n), sigma_i(j))
 *
 * Each call also returns the factor-free sum (every factor replaced by 1),
 * which bounds S_r from below because all positive factors lie in (0, 1].
 */

#include <optional>
#include <vector>

#include "osc/criteria/factor_table.hpp"
#include "osc/criteria/outcome.hpp"
#include "osc/equations/envelope.hpp"

namespace osc {

enum class Extremum { Max, Min };

struct SequenceSummary {
  std::optional<ExtendedValue> extremal;
  bool exact = false;  // window is periodic with the equation period and untruncated
  std::vector<long> witnesses;
  long window_start = 0;
  long window_end = 0;  // inclusive
};

/// values[k] belongs to index window_start + k.
SequenceSummary summarize(const std::vector<ExtendedValue>& values, long window_start, long period,
                          Extremum which);

struct LimsupSum {
  int r = 0;
  long window_start = 0;
  std::vector<ExtendedValue> values;
  SequenceSummary summary;
  std::vector<ExtendedValue> base_values;
  SequenceSummary base_summary;
};

/// First index of the level-r evaluation window.
long limsup_window_start(const EquationSpec& eq, int r);

LimsupSum limsup_sum_retarded(FactorTable& table, const EnvelopeTable& phi, int r);
LimsupSum limsup_sum_advanced(FactorTable& table, const EnvelopeTable& rho, int r);

}  // namespace osc
