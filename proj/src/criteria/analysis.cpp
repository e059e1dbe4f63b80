#include "osc/criteria/analysis.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "osc/criteria/sums.hpp"

namespace osc {

namespace {

bool brackets_settled(FactorTable& table, int r, long from, long to) {
  for (long i = from; i <= to; ++i) {
    const Factor& now = table.bracket(r, i);
    const Factor& before = table.bracket(r - 1, i);
    if (now.value != before.value || now.truncated || before.truncated) return false;
  }
  return true;
}

struct ParsedId {
  std::string base;
  bool advanced = false;
  int r = 0;
};

ParsedId parse_id(const std::string& id) {
  static const std::regex pattern(R"((T2\.[345]|T3\.[34])(a?)(?:\((\d+)\))?|(B-5\.16|B-3\.1|B-3\.2))");
  std::smatch m;
  if (!std::regex_match(id, m, pattern)) throw std::invalid_argument("unknown criterion '" + id + "'");
  ParsedId out;
  if (m[4].matched) {
    out.base = m[4].str();
    out.advanced = out.base == "B-3.2";
    return out;
  }
  out.base = m[1].str();
  out.advanced = m[2].length() > 0;
  const bool iterative = out.base == "T2.4" || out.base == "T2.5";
  if (iterative != m[3].matched) {
    throw std::invalid_argument("criterion '" + id + "' " + (iterative ? "needs a level, e.g. (2)" : "takes no level"));
  }
  if (iterative) {
    out.r = std::stoi(m[3].str());
    if (out.r < 1) throw std::invalid_argument("criterion level must be >= 1 in '" + id + "'");
  }
  return out;
}

}  // namespace

CriterionOutcome evaluate_criterion(CriteriaContext& ctx, const std::string& id, const CriteriaOptions& opts) {
  const ParsedId p = parse_id(id);
  if (p.advanced == ctx.equation().retarded()) {
    throw std::invalid_argument("criterion '" + id + "' does not apply to " + to_string(ctx.equation().kind()) +
                                " equations");
  }
  if (p.base == "T2.3") return test_T2_3(ctx);
  if (p.base == "T2.4") return test_T2_4(ctx, p.r, opts);
  if (p.base == "T2.5") return test_T2_5(ctx, p.r, opts);
  if (p.base == "T3.3") return test_T3_3(ctx);
  if (p.base == "T3.4") return test_T3_4(ctx, opts);
  for (auto& o : baseline_tests(ctx, opts)) {
    if (o.id == p.base) return o;
  }
  throw std::invalid_argument("unknown criterion '" + id + "'");
}

int max_level(const std::vector<std::string>& ids) {
  int r = 0;
  for (const auto& id : ids) r = std::max(r, parse_id(id).r);
  return r;
}

long required_horizon(const EquationSpec& eq, int r_max) {
  const long p = eq.period();
  const long d = std::max(1L, eq.max_offset());
  return limsup_window_start(eq, r_max) + 3 * p + 2 * (d + 1);
}

AnalysisResult analyze(const EquationSpec& input, const CriteriaOptions& opts) {
  AnalysisResult result;
  EquationSpec eq = input;
  const long needed = required_horizon(eq, opts.r_max);
  if (eq.horizon() < needed) {
    eq = eq.with_horizon(needed);
    result.notes.push_back("horizon extended from " + std::to_string(input.horizon()) + " to " +
                           std::to_string(needed));
  }
  result.horizon_used = eq.horizon();

  CriteriaContext ctx(eq, opts.r_max);
  result.hypotheses = ctx.hypotheses();
  for (const auto& w : result.hypotheses.warnings()) result.notes.push_back(w);

  result.outcomes.push_back(test_T2_3(ctx));
  for (int r = 1; r <= opts.r_max; ++r) {
    result.r_reached = r;
    CriterionOutcome t4 = test_T2_4(ctx, r, opts);
    CriterionOutcome t5 = test_T2_5(ctx, r, opts);
    const bool done = t4.proven() || t5.proven();
    result.outcomes.push_back(std::move(t4));
    result.outcomes.push_back(std::move(t5));
    if (done) break;
    if (r >= 2 && ctx.hypotheses().coefficient_sum_below_one &&
        brackets_settled(ctx.table(), r, limsup_window_start(eq, r), eq.horizon())) {
      result.notes.push_back("factor brackets reached a fixed point at r = " + std::to_string(r));
      break;
    }
  }
  result.outcomes.push_back(test_T3_3(ctx));
  result.outcomes.push_back(test_T3_4(ctx, opts));
  for (auto& b : baseline_tests(ctx, opts)) result.outcomes.push_back(std::move(b));

  for (const auto& o : result.outcomes) {
    if (o.proven()) result.proven_by.push_back(o.id);
  }
  result.proven = !result.proven_by.empty();
  return result;
}

}  // namespace osc
