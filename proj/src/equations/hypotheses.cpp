#include "osc/equations/hypotheses.hpp"

#include <algorithm>

namespace osc {

bool HypothesisReport::all_monotone() const {
  return std::all_of(monotone_arguments.begin(), monotone_arguments.end(),
                     [](bool b) { return b; });
}

std::vector<std::string> HypothesisReport::warnings() const {
  std::vector<std::string> w;
  const bool r = kind == EquationKind::Retarded;
  if (!argument_limit) {
    w.emplace_back(r ? "tau_i(n) -> infinity fails: some tau_i(n) has a CONSTANT case"
                     : "sigma_i(n) >= n+1 cannot hold for all n: some sigma_i(n) has a CONSTANT case");
  }
  if (!coefficient_sum_below_one) w.emplace_back("sum_i p_i(n) < 1 fails at some n");
  if (!all_monotone()) w.emplace_back("arguments are not monotone");
  return w;
}

HypothesisReport check_hypotheses(const EquationSpec& eq) {
  HypothesisReport h;
  h.kind = eq.kind();
  h.argument_limit = eq.offset_only();
  h.bounded_deviation = h.argument_limit;
  for (const auto& t : eq.terms()) {
    const auto b = t.arg.deviation_bound();
    h.deviation_bounds.push_back(b);
    if (b) h.max_deviation_bound = std::max(h.max_deviation_bound.value_or(0), *b);
  }
  if (!h.bounded_deviation) h.max_deviation_bound.reset();

  const long N = eq.horizon();
  h.coefficient_sum_below_one = true;
  for (long n = 0; n <= N; ++n) {
    if (eq.coeff_sum(n) >= Rational(1)) {
      h.coefficient_sum_below_one = false;
      h.sum_at_least_one.push_back(n);
    }
  }
  const long s = eq.stable_start();
  for (long n = s; n < s + eq.period(); ++n) {
    if (eq.coeff_sum(n) >= Rational(1)) h.sum_at_least_one_infinitely = true;
  }

  long min_arg = 0;
  long max_adv = 0;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    bool mono = true;
    for (long n = 0; n <= N; ++n) {
      const long a = eq.arg(i, n);
      if (n > 0 && a < eq.arg(i, n - 1)) mono = false;
      min_arg = std::min(min_arg, a);
      max_adv = std::max(max_adv, a - N);
    }
    h.monotone_arguments.push_back(mono);
  }
  if (eq.retarded()) {
    h.initial_depth = -min_arg;
  } else {
    h.terminal_depth = max_adv;
  }
  return h;
}

}  // namespace osc
