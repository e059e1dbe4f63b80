#include "osc/cli/report.hpp"

#include <map>
#include <ostream>

namespace osc::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string value_text(const std::optional<ExtendedValue>& v) {
  if (!v) return "-";
  if (v->infinite) return "inf";
  // Long exact forms are only useful in CSV; keep the text report readable.
  std::string exact = v->value.str();
  if (exact.size() > 40) return v->value.decimal(12);
  return exact + " (" + v->value.decimal(12) + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string overall_verdict(const AnalysisResult& result) {
  return result.proven ? "OSCILLATORY_PROVEN" : "NOT_PROVEN";
}

void write_hypotheses_text(std::ostream& out, const HypothesisReport& h) {
  const bool r = h.kind == EquationKind::Retarded;
  out << "hypotheses:\n";
  out << "  " << (r ? "tau_i(n) -> infinity" : "sigma_i(n) >= n+1 for all n") << ": " << yes_no(h.argument_limit)
      << "\n";
  out << "  bounded deviations: " << yes_no(h.bounded_deviation);
  if (h.max_deviation_bound) out << " (" << (r ? "M" : "mu") << " = " << *h.max_deviation_bound << ")";
  out << "\n";
  out << "  sum_i p_i(n) < 1 on the horizon: " << yes_no(h.coefficient_sum_below_one) << "\n";
  out << "  sum_i p_i(n) >= 1 infinitely often: " << yes_no(h.sum_at_least_one_infinitely) << "\n";
  out << "  monotone arguments: " << yes_no(h.all_monotone()) << "\n";
  if (r) {
    out << "  initial depth w: " << h.initial_depth << "\n";
  } else {
    out << "  terminal depth: " << h.terminal_depth << "\n";
  }
  for (const auto& w : h.warnings()) out << "  warning: " << w << "\n";
}

void write_outcome_text(std::ostream& out, const CriterionOutcome& o) {
  out << "  " << o.id << ": " << to_string(o.verdict) << "\n";
  if (o.extremal) out << "    value: " << value_text(o.extremal) << (o.exact ? " exact" : " windowed") << "\n";
  if (o.lower_bound) out << "    lower bound: " << value_text(ExtendedValue::finite(*o.lower_bound)) << "\n";
  if (!o.threshold.empty()) out << "    threshold: " << o.threshold << "\n";
  if (o.comparison) {
    out << "    comparison: " << to_string(o.comparison->outcome);
    if (o.comparison->precision_used) out << " at " << o.comparison->precision_used << " bits";
    out << "\n";
  }
  for (const auto& c : o.components) {
    out << "    " << c.label << " = " << value_text(c.value) << " vs " << c.threshold << ": "
        << to_string(c.comparison.outcome) << (c.exact ? "" : " (windowed)") << "\n";
  }
  if (!o.witnesses.empty()) {
    out << "    witnesses:";
    for (long n : o.witnesses) out << ' ' << n;
    out << "\n";
  }
  for (const auto& n : o.notes) out << "    note: " << n << "\n";
}

void write_analysis_text(std::ostream& out, const std::string& name, const EquationSpec& eq,
                         const AnalysisResult& result) {
  out << "equation: " << (name.empty() ? "(unnamed)" : name) << "\n";
  out << "  kind: " << to_string(eq.kind()) << ", terms: " << eq.size() << ", period: " << eq.period()
      << ", stable from: " << eq.stable_start() << ", horizon: " << result.horizon_used << "\n";
  write_hypotheses_text(out, result.hypotheses);
  out << "criteria (r up to " << result.r_reached << "):\n";
  for (const auto& o : result.outcomes) write_outcome_text(out, o);
  for (const auto& n : result.notes) out << "note: " << n << "\n";
  out << "overall: " << overall_verdict(result);
  if (result.proven) {
    out << " via";
    for (const auto& id : result.proven_by) out << ' ' << id;
  }
  out << "\n";
}

void write_analysis_csv(std::ostream& out, const AnalysisResult& result) {
  out << "criterion,verdict,value,value_decimal,threshold,exact\n";
  for (const auto& o : result.outcomes) {
    out << o.id << ',' << to_string(o.verdict) << ',' << (o.extremal ? o.extremal->str() : "") << ','
        << (o.extremal ? o.extremal->decimal() : "") << ',' << csv_field(o.threshold) << ','
        << (o.exact ? "true" : "false") << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "param,criterion,verdict,value\n";
  for (const auto& r : rows) {
    out << r.param.decimal(12) << ',' << r.criterion << ',' << to_string(r.verdict) << ','
        << (r.value ? r.value->decimal() : "") << '\n';
  }
}

std::vector<Transition> find_transitions(const std::vector<SweepRow>& rows) {
  std::vector<Transition> out;
  std::map<std::string, const SweepRow*> last;
  for (const auto& r : rows) {
    auto it = last.find(r.criterion);
    if (it != last.end() && it->second->verdict != r.verdict) {
      out.push_back({r.criterion, it->second->param, r.param, it->second->verdict, r.verdict});
    }
    last[r.criterion] = &r;
  }
  return out;
}

void write_transitions_text(std::ostream& out, const std::vector<Transition>& transitions) {
  if (transitions.empty()) {
    out << "transitions: none\n";
    return;
  }
  out << "transitions:\n";
  for (const auto& t : transitions) {
    out << "  " << t.criterion << ": " << to_string(t.from) << " -> " << to_string(t.to) << " between "
        << t.before.decimal(12) << " and " << t.after.decimal(12) << "\n";
  }
}

void write_verification_text(std::ostream& out, const VerificationResult& v) {
  out << "certificate: " << to_string(v.status) << "\n";
  if (v.combined_period) {
    out << "  residuals checked for n in [" << v.checked_from << ", " << v.checked_to << "), combined period "
        << v.combined_period << "\n";
  }
  if (v.first_failing_index) {
    out << "  first failing index: n = " << *v.first_failing_index << " (defines x(" << *v.failing_value_index
        << ")), residual " << v.failing_residual->str() << "\n";
  }
  if (v.degenerate) out << "  degenerate: the periodic part is identically zero\n";
  if (v.verified() && !v.degenerate) {
    out << "  sign of the periodic part: " << (v.sign > 0 ? "positive" : v.sign < 0 ? "negative" : "mixed") << "\n";
    if (v.proves_nonoscillation()) out << "  proves an eventually one-signed solution\n";
  }
  if (!v.reason.empty()) out << "  reason: " << v.reason << "\n";
}

}  // namespace osc::cli
