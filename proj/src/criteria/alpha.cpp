#include "osc/criteria/alpha.hpp"

#include <algorithm>
#include <stdexcept>

#include "osc/criteria/sums.hpp"

namespace osc {

namespace {

AlphaReport assemble(const EquationSpec& eq, long start, std::vector<std::vector<ExtendedValue>> series) {
  AlphaReport out;
  out.window_start = start;
  out.exact = true;
  for (std::size_t i = 0; i < series.size(); ++i) {
    SequenceSummary s = summarize(series[i], start, eq.period(), Extremum::Min);
    out.per_term.push_back(s.extremal ? s.extremal->value : Rational(0));
    out.per_term_exact.push_back(s.exact);
    out.exact = out.exact && s.exact;
  }
  out.alpha = *std::min_element(out.per_term.begin(), out.per_term.end());
  return out;
}

Rational sqrt_argument(const Rational& alpha) { return Rational(1) - Rational(2) * alpha - alpha * alpha; }

}  // namespace

AlphaReport alpha_retarded(const EquationSpec& eq, const EnvelopeTable& phi) {
  if (!eq.retarded()) throw std::invalid_argument("alpha_retarded on an advanced equation");
  const long start = eq.stable_start() + std::max(1L, eq.max_offset()) + 1;
  const long last = std::min(eq.horizon(), phi.last_index());
  std::vector<std::vector<ExtendedValue>> series(eq.size());
  for (std::size_t i = 0; i < eq.size(); ++i) {
    for (long n = start; n <= last; ++n) {
      const long f = phi.term_at(i, n);
      Rational sum(0);
      for (long j = std::max(0L, f); j < n; ++j) sum += eq.coeff(i, j);
      series[i].push_back(ExtendedValue::finite(std::move(sum), f < 0));
    }
  }
  return assemble(eq, start, std::move(series));
}

AlphaReport alpha_advanced(const EquationSpec& eq, const EnvelopeTable& rho) {
  if (eq.retarded()) throw std::invalid_argument("alpha_advanced on a retarded equation");
  const long start = eq.stable_start();
  const long last = std::min(eq.horizon(), rho.last_index());
  std::vector<std::vector<ExtendedValue>> series(eq.size());
  for (std::size_t i = 0; i < eq.size(); ++i) {
    for (long n = start; n <= last; ++n) {
      const long g = rho.term_at(i, n);
      Rational sum(0);
      for (long j = n + 1; j <= g; ++j) sum += eq.coeff(i, j);
      series[i].push_back(ExtendedValue::finite(std::move(sum)));
    }
  }
  return assemble(eq, start, std::move(series));
}

bool alpha_in_domain(const Rational& alpha) { return alpha.sign() >= 0 && sqrt_argument(alpha).sign() >= 0; }

std::optional<RealInterval> lower_ratio_bound(const Rational& alpha, unsigned precision_bits) {
  if (!alpha_in_domain(alpha)) return std::nullopt;
  RealInterval root = interval_sqrt(sqrt_argument(alpha), precision_bits);
  return (RealInterval(Rational(1) - alpha, precision_bits) - root).half();
}

std::optional<RealInterval> one_minus_lower_ratio_bound(const Rational& alpha, unsigned precision_bits) {
  if (!alpha_in_domain(alpha)) return std::nullopt;
  RealInterval root = interval_sqrt(sqrt_argument(alpha), precision_bits);
  return (RealInterval(Rational(1) + alpha, precision_bits) + root).half();
}

}  // namespace osc
