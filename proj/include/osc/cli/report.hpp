#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "osc/criteria/analysis.hpp"
#include "osc/simulate/certificate.hpp"

namespace osc::cli {

/// "OSCILLATORY_PROVEN" when some criterion proves oscillation, else "NOT_PROVEN".
std::string overall_verdict(const AnalysisResult& result);

void write_hypotheses_text(std::ostream& out, const HypothesisReport& h);
void write_outcome_text(std::ostream& out, const CriterionOutcome& o);
void write_analysis_text(std::ostream& out, const std::string& name, const EquationSpec& eq,
                         const AnalysisResult& result);
/// criterion,verdict,value,value_decimal,threshold,exact
void write_analysis_csv(std::ostream& out, const AnalysisResult& result);

struct SweepRow {
  Rational param;
  std::string criterion;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<ExtendedValue> value;
};

struct Transition {
  std::string criterion;
  Rational before;
  Rational after;
  Verdict from = Verdict::Inconclusive;
  Verdict to = Verdict::Inconclusive;
};

/// param,criterion,verdict,value
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// Adjacent grid points (per criterion, in row order) with different verdicts.
std::vector<Transition> find_transitions(const std::vector<SweepRow>& rows);
void write_transitions_text(std::ostream& out, const std::vector<Transition>& transitions);

void write_verification_text(std::ostream& out, const VerificationResult& v);

}  // namespace osc::cli
