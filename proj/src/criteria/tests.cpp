#include "osc/criteria/tests.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "osc/criteria/sums.hpp"

namespace osc {

namespace {

constexpr std::size_t kMaxWitnesses = 16;
constexpr unsigned kReportBits = 64;

void require_kind(const CriteriaContext& ctx, EquationKind kind, const char* name) {
  if (ctx.equation().kind() != kind) {
    throw std::invalid_argument(std::string(name) + " does not apply to " +
                                to_string(ctx.equation().kind()) + " equations");
  }
}

std::string argument_limit_label(EquationKind kind) {
  return kind == EquationKind::Retarded ? "tau_i(n) -> infinity" : "sigma_i(n) >= n+1";
}

std::string interval_text(const RealInterval& x) {
  return "[" + x.lower_str(12) + ", " + x.upper_str(12) + "]";
}

ComparisonVerdict compare_extended(const ExtendedValue& v, const Threshold& thr, unsigned max_bits) {
  if (v.infinite) return {Ordering::Greater, 0};
  return compare(v.value, thr, max_bits);
}

/// sum over terms i of sum_{j in range(i, n)} p_i(j), for n in [start, last].
using RangeFn = std::function<std::pair<long, long>(std::size_t, long)>;

std::vector<ExtendedValue> window_series(const EquationSpec& eq, long start, long last, const RangeFn& range) {
  std::vector<ExtendedValue> out;
  for (long n = start; n <= last; ++n) {
    Rational sum(0);
    bool truncated = false;
    for (std::size_t i = 0; i < eq.size(); ++i) {
      auto [lo, hi] = range(i, n);
      if (lo < 0) {
        truncated = true;
        lo = 0;
      }
      for (long j = lo; j <= hi; ++j) sum += eq.coeff(i, j);
    }
    out.push_back(ExtendedValue::finite(std::move(sum), truncated));
  }
  return out;
}

/// Rule shared by the component-wise (liminf) tests.
void decide(CriterionOutcome& out, bool hypotheses_ok, const std::vector<std::string>& failed_hypotheses) {
  bool any_less = false;
  bool any_unresolved = false;
  for (const auto& c : out.components) {
    if (c.comparison.outcome == Ordering::Less) any_less = true;
    if (c.comparison.outcome == Ordering::Indeterminate) any_unresolved = true;
  }
  if (any_less) {
    out.verdict = Verdict::Inconclusive;
  } else if (any_unresolved) {
    out.verdict = Verdict::IndeterminatePrecision;
  } else if (!out.exact) {
    out.verdict = Verdict::IndicativeOnly;
    out.notes.push_back("inequality holds on the window but the limit was not confirmed periodic");
  } else if (!hypotheses_ok) {
    out.verdict = Verdict::IndicativeOnly;
  } else {
    out.verdict = Verdict::OscillatoryProven;
  }
  if (!hypotheses_ok) {
    for (const auto& h : failed_hypotheses) out.notes.push_back("hypothesis fails: " + h);
  }
}

std::vector<std::string> argument_hypotheses(const CriteriaContext& ctx, bool& ok) {
  std::vector<std::string> failed;
  if (!ctx.hypotheses().argument_limit) failed.push_back(argument_limit_label(ctx.equation().kind()));
  ok = failed.empty();
  return failed;
}

/// Shared body of the limsup tests T2.4 / T2.5 and their duals.
CriterionOutcome limsup_test(CriteriaContext& ctx, CriterionOutcome out, int r, const Threshold& thr,
                             const CriteriaOptions& opts, bool limits_exact) {
  const EquationSpec& eq = ctx.equation();
  LimsupSum sums = eq.retarded() ? limsup_sum_retarded(ctx.table(), ctx.envelope(), r)
                                 : limsup_sum_advanced(ctx.table(), ctx.envelope(), r);
  out.window_start = sums.window_start;
  out.values = sums.values;
  out.extremal = sums.summary.extremal;
  out.exact = sums.summary.exact;
  out.witnesses = sums.summary.witnesses;
  if (sums.base_summary.exact && sums.base_summary.extremal) out.lower_bound = sums.base_summary.extremal->value;
  if (!out.extremal) {
    out.verdict = Verdict::Inconclusive;
    out.notes.push_back("empty evaluation window");
    return out;
  }

  const ComparisonVerdict cmp_s = compare_extended(*out.extremal, thr, opts.max_precision_bits);
  std::optional<ComparisonVerdict> cmp_b;
  if (sums.base_summary.extremal) {
    cmp_b = compare_extended(*sums.base_summary.extremal, thr, opts.max_precision_bits);
  }
  out.comparison = cmp_s;

  const bool base_holds = cmp_b && sums.base_summary.exact && cmp_b->outcome == Ordering::Greater;
  const bool sum_holds = out.exact && cmp_s.outcome == Ordering::Greater;
  bool holds = false;
  bool exact_claim = false;
  if (sum_holds || base_holds) {
    holds = true;
    exact_claim = true;
    if (!sum_holds) {
      out.comparison = *cmp_b;
      out.notes.push_back("the factor-free lower bound already exceeds the threshold");
    }
  } else if (out.exact) {
    out.verdict = cmp_s.outcome == Ordering::Indeterminate ? Verdict::IndeterminatePrecision
                                                           : Verdict::Inconclusive;
    return out;
  } else {
    out.notes.push_back("limsup not confirmed periodic; windowed maximum reported");
    if (cmp_s.outcome == Ordering::Greater || (cmp_b && cmp_b->outcome == Ordering::Greater)) {
      holds = true;
    } else {
      out.verdict = Verdict::Inconclusive;
      return out;
    }
  }

  bool hyp_ok = false;
  std::vector<std::string> failed = argument_hypotheses(ctx, hyp_ok);
  if (holds && exact_claim && limits_exact && hyp_ok) {
    out.verdict = Verdict::OscillatoryProven;
  } else {
    out.verdict = Verdict::IndicativeOnly;
    for (const auto& h : failed) out.notes.push_back("hypothesis fails: " + h);
  }
  if (sums.summary.extremal && sums.summary.extremal->infinite) {
    out.notes.push_back("a nonpositive factor bracket makes the sum infinite");
  }
  return out;
}

CriterionOutcome not_applicable(CriterionOutcome out, std::string why) {
  out.verdict = Verdict::NotApplicable;
  out.notes.push_back(std::move(why));
  return out;
}

ComponentResult limsup_sum_component(const EquationSpec& eq) {
  ComponentResult c;
  c.label = "limsup sum_i p_i(n)";
  Rational best(0);
  for (long n = eq.stable_start(); n < eq.stable_start() + eq.period(); ++n) best = std::max(best, eq.coeff_sum(n));
  c.value = ExtendedValue::finite(best);
  c.threshold = "0";
  c.comparison = compare(best, Rational(0));
  c.exact = true;
  return c;
}

ComponentResult liminf_component(std::string label, const std::vector<ExtendedValue>& series, long start,
                                 const EquationSpec& eq, const Threshold& thr, unsigned max_bits) {
  SequenceSummary s = summarize(series, start, eq.period(), Extremum::Min);
  ComponentResult c;
  c.label = std::move(label);
  c.value = s.extremal.value_or(ExtendedValue::finite(Rational(0)));
  c.threshold = thr.description;
  c.exact = s.exact;
  c.comparison = compare_extended(c.value, thr, max_bits);
  return c;
}

long liminf_start(const EquationSpec& eq, const HypothesisReport& h) {
  if (!eq.retarded()) return eq.stable_start();
  long d = std::max(1L, h.max_deviation_bound.value_or(eq.max_offset()));
  return eq.stable_start() + d + 1;
}

/// L_k series: retarded sum_i sum_{j=tau_k(n)}^{n-1} p_i(j), advanced sum_i sum_{j=n+1}^{sigma_k(n)} p_i(j).
std::vector<ExtendedValue> lk_series(const EquationSpec& eq, std::size_t k, long start) {
  if (eq.retarded()) {
    return window_series(eq, start, eq.horizon(),
                         [&](std::size_t, long n) { return std::make_pair(eq.arg(k, n), n - 1); });
  }
  return window_series(eq, start, eq.horizon(),
                       [&](std::size_t, long n) { return std::make_pair(n + 1, eq.arg(k, n)); });
}

bool all_exact(const CriterionOutcome& out) {
  return std::all_of(out.components.begin(), out.components.end(), [](const auto& c) { return c.exact; });
}

void fill_extremal_from_components(CriterionOutcome& out) {
  // The binding component: the smallest value relative to its comparison.
  for (const auto& c : out.components) {
    if (!out.extremal || c.comparison.outcome != Ordering::Greater) {
      out.extremal = c.value;
      out.threshold = c.threshold;
      out.comparison = c.comparison;
      if (c.comparison.outcome != Ordering::Greater) break;
    }
  }
}

}  // namespace

CriteriaContext::CriteriaContext(EquationSpec eq, int r_max)
    : table_(std::move(eq), r_max),
      hypotheses_(check_hypotheses(table_.equation())),
      envelope_(table_.equation().retarded() ? build_phi(table_.equation()) : build_rho(table_.equation())) {}

const AlphaReport& CriteriaContext::alpha() {
  if (!alpha_) {
    alpha_ = equation().retarded() ? alpha_retarded(equation(), envelope_) : alpha_advanced(equation(), envelope_);
  }
  return *alpha_;
}

std::string criterion_id(const std::string& base, EquationKind kind, int r) {
  std::string id = base;
  if (kind == EquationKind::Advanced) id += "a";
  if (r > 0) id += "(" + std::to_string(r) + ")";
  return id;
}

CriterionOutcome test_T2_3(CriteriaContext& ctx) {
  const EquationSpec& eq = ctx.equation();
  const HypothesisReport& h = ctx.hypotheses();
  CriterionOutcome out;
  out.id = criterion_id("T2.3", eq.kind());
  out.window_start = eq.stable_start();
  Rational best(0);
  for (long n = eq.stable_start(); n < eq.stable_start() + eq.period(); ++n) {
    Rational s = eq.coeff_sum(n);
    best = std::max(best, s);
    out.values.push_back(ExtendedValue::finite(std::move(s)));
  }
  out.extremal = ExtendedValue::finite(best);
  out.exact = true;
  out.threshold = "1 (attained infinitely often)";
  out.comparison = ComparisonVerdict{best >= Rational(1) ? Ordering::Greater : Ordering::Less, 0};
  for (long n : h.sum_at_least_one) {
    if (out.witnesses.size() >= kMaxWitnesses) break;
    out.witnesses.push_back(n);
  }
  if (!h.sum_at_least_one_infinitely) {
    out.verdict = Verdict::Inconclusive;
    return out;
  }
  if (h.argument_limit) {
    out.verdict = Verdict::OscillatoryProven;
  } else {
    out.verdict = Verdict::IndicativeOnly;
    out.notes.push_back("hypothesis fails: " + argument_limit_label(eq.kind()));
  }
  return out;
}

CriterionOutcome test_T2_4(CriteriaContext& ctx, int r, const CriteriaOptions& opts) {
  CriterionOutcome out;
  out.id = criterion_id("T2.4", ctx.equation().kind(), r);
  out.level = r;
  out.threshold = "1";
  if (!ctx.hypotheses().coefficient_sum_below_one) {
    return not_applicable(std::move(out), "needs sum_i p_i(n) < 1 for all n");
  }
  return limsup_test(ctx, std::move(out), r, Threshold::exact(Rational(1), "1"), opts, true);
}

CriterionOutcome test_T2_5(CriteriaContext& ctx, int r, const CriteriaOptions& opts) {
  CriterionOutcome out;
  out.id = criterion_id("T2.5", ctx.equation().kind(), r);
  out.level = r;
  out.threshold = "1 - c(alpha)";
  if (!ctx.hypotheses().coefficient_sum_below_one) {
    return not_applicable(std::move(out), "needs sum_i p_i(n) < 1 for all n");
  }
  const AlphaReport& a = ctx.alpha();
  const Rational alpha = a.alpha;
  out.notes.push_back("alpha = " + alpha.str() + (a.exact ? "" : " (windowed minimum)"));
  if (alpha.sign() <= 0) return not_applicable(std::move(out), "needs alpha > 0");
  ComparisonVerdict vs_e = compare(alpha, Threshold::inv_e(), opts.max_precision_bits);
  if (vs_e.outcome == Ordering::Greater) return not_applicable(std::move(out), "needs alpha <= 1/e");
  if (vs_e.outcome == Ordering::Indeterminate) {
    out.verdict = Verdict::IndeterminatePrecision;
    out.notes.push_back("alpha versus 1/e unresolved");
    return out;
  }
  if (!alpha_in_domain(alpha)) return not_applicable(std::move(out), "alpha outside the domain of c");

  IntervalThunk thunk = [alpha](unsigned bits) { return *one_minus_lower_ratio_bound(alpha, bits); };
  RealInterval shown = thunk(kReportBits);
  out.threshold = "1 - c(" + alpha.str() + ") in " + interval_text(shown);
  out.threshold_lower = shown.lower_double();
  out.threshold_upper = shown.upper_double();
  CriterionOutcome result =
      limsup_test(ctx, std::move(out), r, Threshold::real(thunk, "1 - c(" + alpha.str() + ")"), opts, a.exact);
  if (!a.exact && result.verdict == Verdict::IndicativeOnly) {
    result.notes.push_back("alpha not confirmed periodic");
  }
  return result;
}

CriterionOutcome test_T3_3(CriteriaContext& ctx) {
  const EquationSpec& eq = ctx.equation();
  const HypothesisReport& h = ctx.hypotheses();
  CriterionOutcome out;
  out.id = criterion_id("T3.3", eq.kind());
  if (!h.bounded_deviation || !h.max_deviation_bound) {
    return not_applicable(std::move(out), "needs bounded deviations");
  }
  const long start = liminf_start(eq, h);
  out.window_start = start;
  for (std::size_t k = 0; k < eq.size(); ++k) {
    const long m = *h.deviation_bounds[k];
    const Rational base(m, m + 1);
    const Rational thr = base.pow(static_cast<unsigned>(m + 1));
    const std::string mname = eq.retarded() ? "M" : "mu";
    auto series = lk_series(eq, k, start);
    out.components.push_back(liminf_component("L_" + std::to_string(k + 1) + " (" + mname + "_" +
                                                  std::to_string(k + 1) + " = " + std::to_string(m) + ")",
                                              series, start, eq,
                                              Threshold::exact(thr, "(" + base.str() + ")^" + std::to_string(m + 1) +
                                                                        " = " + thr.str()),
                                              0));
  }
  out.exact = all_exact(out);
  fill_extremal_from_components(out);
  bool ok = false;
  auto failed = argument_hypotheses(ctx, ok);
  decide(out, ok, failed);
  return out;
}

CriterionOutcome test_T3_4(CriteriaContext& ctx, const CriteriaOptions& opts) {
  const EquationSpec& eq = ctx.equation();
  const HypothesisReport& h = ctx.hypotheses();
  CriterionOutcome out;
  out.id = criterion_id("T3.4", eq.kind());
  if (!eq.retarded() && !h.bounded_deviation) return not_applicable(std::move(out), "needs bounded advances");
  const long start = liminf_start(eq, h);
  out.window_start = start;
  const Threshold inv_e = Threshold::inv_e();
  for (std::size_t k = 0; k < eq.size(); ++k) {
    auto series = lk_series(eq, k, start);
    ComponentResult c = liminf_component("L_" + std::to_string(k + 1), series, start, eq, inv_e,
                                         opts.max_precision_bits);
    if (opts.nonstrict && c.comparison.outcome == Ordering::Indeterminate) {
      // Unresolved at the cap: the value lies inside the 1/e enclosure, so it
      // is at least its lower endpoint, which the non-strict reading accepts.
      RealInterval e = interval_inv_e(opts.max_precision_bits);
      if (!c.value.infinite && e.locate(c.value.value) >= 0) {
        c.comparison.outcome = Ordering::Greater;
        out.notes.push_back(c.label + " accepted under the non-strict reading");
      }
    }
    out.components.push_back(std::move(c));
  }
  out.exact = all_exact(out);
  fill_extremal_from_components(out);
  bool ok = false;
  auto failed = argument_hypotheses(ctx, ok);
  decide(out, ok, failed);
  return out;
}

std::vector<CriterionOutcome> baseline_tests(CriteriaContext& ctx, const CriteriaOptions& opts) {
  const EquationSpec& eq = ctx.equation();
  const HypothesisReport& h = ctx.hypotheses();
  const long start = liminf_start(eq, h);
  const Threshold inv_e = Threshold::inv_e();
  std::vector<CriterionOutcome> result;

  auto finish = [&](CriterionOutcome out) {
    out.exact = all_exact(out);
    fill_extremal_from_components(out);
    bool ok = false;
    auto failed = argument_hypotheses(ctx, ok);
    decide(out, ok, failed);
    if (!h.all_monotone()) {
      out.notes.push_back("arguments are not monotone");
      if (out.verdict == Verdict::OscillatoryProven || out.verdict == Verdict::IndicativeOnly) {
        out.verdict = Verdict::NotApplicable;
      }
    }
    result.push_back(std::move(out));
  };

  if (eq.retarded()) {
    CriterionOutcome b516;
    b516.id = "B-5.16";
    b516.window_start = start;
    b516.components.push_back(limsup_sum_component(eq));
    auto tau_max = [&](long n) {
      long t = eq.arg(0, n);
      for (std::size_t i = 1; i < eq.size(); ++i) t = std::max(t, eq.arg(i, n));
      return t;
    };
    auto s516 = window_series(eq, start, eq.horizon(),
                              [&](std::size_t, long n) { return std::make_pair(tau_max(n), n - 1); });
    b516.components.push_back(liminf_component("liminf sum_i sum_{j=tau(n)}^{n-1} p_i(j)", s516, start, eq,
                                               inv_e, opts.max_precision_bits));
    finish(std::move(b516));

    CriterionOutcome b31;
    b31.id = "B-3.1";
    b31.window_start = start;
    b31.components.push_back(limsup_sum_component(eq));
    auto s31 = window_series(eq, start, eq.horizon(),
                             [&](std::size_t i, long n) { return std::make_pair(eq.arg(i, n), n - 1); });
    b31.components.push_back(liminf_component("liminf sum_i sum_{j=tau_i(n)}^{n-1} p_i(j)", s31, start, eq,
                                              inv_e, opts.max_precision_bits));
    finish(std::move(b31));
  } else {
    CriterionOutcome b32;
    b32.id = "B-3.2";
    b32.window_start = start;
    b32.components.push_back(limsup_sum_component(eq));
    auto s32 = window_series(eq, start, eq.horizon(),
                             [&](std::size_t i, long n) { return std::make_pair(n + 1, eq.arg(i, n)); });
    b32.components.push_back(liminf_component("liminf sum_i sum_{j=n+1}^{sigma_i(n)} p_i(j)", s32, start, eq,
                                              inv_e, opts.max_precision_bits));
    finish(std::move(b32));
  }
  return result;
}

CriterionOutcome test_T2_3_adv(CriteriaContext& ctx) {
  require_kind(ctx, EquationKind::Advanced, "T2.3a");
  return test_T2_3(ctx);
}

CriterionOutcome test_T2_4_adv(CriteriaContext& ctx, int r, const CriteriaOptions& opts) {
  require_kind(ctx, EquationKind::Advanced, "T2.4a");
  return test_T2_4(ctx, r, opts);
}

CriterionOutcome test_T2_5_adv(CriteriaContext& ctx, int r, const CriteriaOptions& opts) {
  require_kind(ctx, EquationKind::Advanced, "T2.5a");
  return test_T2_5(ctx, r, opts);
}

CriterionOutcome test_T3_3_adv(CriteriaContext& ctx) {
  require_kind(ctx, EquationKind::Advanced, "T3.3a");
  return test_T3_3(ctx);
}

CriterionOutcome test_T3_4_adv(CriteriaContext& ctx, const CriteriaOptions& opts) {
  require_kind(ctx, EquationKind::Advanced, "T3.4a");
  return test_T3_4(ctx, opts);
}

}  // namespace osc
