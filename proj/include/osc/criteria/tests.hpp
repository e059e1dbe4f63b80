#pragma once

/**
 * @file tests.hpp
 * @brief Oscillation criteria for retarded and advanced equations.
 *
 * Identifiers: "T2.3", "T2.4(r)", "T2.5(r)", "T3.3", "T3.4" for retarded
 * equations, the same with an "a" suffix for advanced ones, and the prior-art
 * baselines "B-5.16", "B-3.1" (retarded) and "B-3.2" (advanced).
 *
 * Verdict rules shared by all tests:
 *  - the inequality fails                      -> INCONCLUSIVE
 *  - the comparison is unresolved at max bits  -> INDETERMINATE_PRECISION
 *  - it holds, limits unconfirmed or a
 *    hypothesis fails                           -> INDICATIVE_ONLY
 *  - it holds exactly with all hypotheses      -> OSCILLATORY_PROVEN
 */

#include <optional>
#include <string>
#include <vector>

#include "osc/criteria/alpha.hpp"
#include "osc/criteria/factor_table.hpp"
#include "osc/criteria/outcome.hpp"
#include "osc/equations/envelope.hpp"
#include "osc/equations/hypotheses.hpp"

namespace osc {

struct CriteriaOptions {
  int r_max = 8;
  unsigned max_precision_bits = kDefaultMaxPrecisionBits;
  bool nonstrict = false;  // accept an unresolved L_k vs 1/e comparison in T3.4
};

/// Per-equation state shared by the criteria of one analysis session.
class CriteriaContext {
 public:
  CriteriaContext(EquationSpec eq, int r_max);

  const EquationSpec& equation() const { return table_.equation(); }
  const HypothesisReport& hypotheses() const { return hypotheses_; }
  const EnvelopeTable& envelope() const { return envelope_; }
  FactorTable& table() { return table_; }
  const AlphaReport& alpha();

 private:
  FactorTable table_;
  HypothesisReport hypotheses_;
  EnvelopeTable envelope_;
  std::optional<AlphaReport> alpha_;
};

std::string criterion_id(const std::string& base, EquationKind kind, int r = 0);

CriterionOutcome test_T2_3(CriteriaContext& ctx);
CriterionOutcome test_T2_4(CriteriaContext& ctx, int r, const CriteriaOptions& opts = {});
CriterionOutcome test_T2_5(CriteriaContext& ctx, int r, const CriteriaOptions& opts = {});
CriterionOutcome test_T3_3(CriteriaContext& ctx);
CriterionOutcome test_T3_4(CriteriaContext& ctx, const CriteriaOptions& opts = {});
std::vector<CriterionOutcome> baseline_tests(CriteriaContext& ctx, const CriteriaOptions& opts = {});

// The advanced duals. The unsuffixed functions above dispatch on the
// equation kind, so these exist for callers that want to insist on it.
CriterionOutcome test_T2_3_adv(CriteriaContext& ctx);
CriterionOutcome test_T2_4_adv(CriteriaContext& ctx, int r, const CriteriaOptions& opts = {});
CriterionOutcome test_T2_5_adv(CriteriaContext& ctx, int r, const CriteriaOptions& opts = {});
CriterionOutcome test_T3_3_adv(CriteriaContext& ctx);
CriterionOutcome test_T3_4_adv(CriteriaContext& ctx, const CriteriaOptions& opts = {});

}  // namespace osc
