#include "osc/criteria/sums.hpp"

#include <algorithm>
#include <stdexcept>

namespace osc {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

long deviation(const EquationSpec& eq) { return std::max(1L, eq.max_offset()); }

}  // namespace

SequenceSummary summarize(const std::vector<ExtendedValue>& values, long window_start, long period,
                          Extremum which) {
  SequenceSummary out;
  out.window_start = window_start;
  out.window_end = window_start + static_cast<long>(values.size()) - 1;
  if (values.empty()) return out;

  const auto p = static_cast<std::size_t>(std::max(1L, period));
  bool exact = values.size() >= 2 * p;
  for (std::size_t k = 0; exact && k < values.size(); ++k) {
    if (values[k].truncated) exact = false;
    if (exact && k + p < values.size() && !values[k].same_value(values[k + p])) exact = false;
  }
  out.exact = exact;

  // A periodic window attains its extremum in the first period. Otherwise
  // prefer untruncated entries.
  std::size_t end = exact ? p : values.size();
  bool any_clean = std::any_of(values.begin(), values.begin() + static_cast<long>(end),
                               [](const ExtendedValue& v) { return !v.truncated; });
  auto eligible = [&](std::size_t k) { return !any_clean || !values[k].truncated; };

  for (std::size_t k = 0; k < end; ++k) {
    if (!eligible(k)) continue;
    if (!out.extremal) {
      out.extremal = values[k];
      continue;
    }
    int c = values[k].cmp(*out.extremal);
    if ((which == Extremum::Max && c > 0) || (which == Extremum::Min && c < 0)) out.extremal = values[k];
  }
  for (std::size_t k = 0; k < end && out.witnesses.size() < kMaxWitnesses; ++k) {
    if (eligible(k) && values[k].cmp(*out.extremal) == 0) {
      out.witnesses.push_back(window_start + static_cast<long>(k));
    }
  }
  return out;
}

long limsup_window_start(const EquationSpec& eq, int r) {
  if (!eq.retarded()) return eq.stable_start();
  return eq.stable_start() + (r + 1) * (deviation(eq) + 1);
}

LimsupSum limsup_sum_retarded(FactorTable& table, const EnvelopeTable& phi, int r) {
  const EquationSpec& eq = table.equation();
  if (!eq.retarded()) throw std::invalid_argument("retarded limsup sum on an advanced equation");
  LimsupSum out;
  out.r = r;
  out.window_start = limsup_window_start(eq, r);
  const long last = std::min(eq.horizon(), phi.last_index());
  for (long n = out.window_start; n <= last; ++n) {
    const long f = phi.at(n);
    Rational sum(0);
    Rational base(0);
    bool infinite = false;
    bool truncated = f < 0;
    for (long j = std::max(0L, f); j <= n; ++j) {
      for (std::size_t i = 0; i < eq.size(); ++i) {
        const Rational& p = eq.coeff(i, j);
        if (p.is_zero()) continue;
        base += p;
        if (infinite) continue;
        const Factor& a = table.factor(r, f, eq.arg(i, j));
        truncated = truncated || a.truncated;
        if (!a.positive()) {
          infinite = true;
          continue;
        }
        sum += p / *a.value;
      }
    }
    out.values.push_back(infinite ? ExtendedValue::plus_infinity(truncated)
                                  : ExtendedValue::finite(std::move(sum), truncated));
    out.base_values.push_back(ExtendedValue::finite(std::move(base), f < 0));
  }
  out.summary = summarize(out.values, out.window_start, eq.period(), Extremum::Max);
  out.base_summary = summarize(out.base_values, out.window_start, eq.period(), Extremum::Max);
  return out;
}

LimsupSum limsup_sum_advanced(FactorTable& table, const EnvelopeTable& rho, int r) {
  const EquationSpec& eq = table.equation();
  if (eq.retarded()) throw std::invalid_argument("advanced limsup sum on a retarded equation");
  LimsupSum out;
  out.r = r;
  out.window_start = limsup_window_start(eq, r);
  const long last = std::min(eq.horizon(), rho.last_index());
  for (long n = out.window_start; n <= last; ++n) {
    const long g = rho.at(n);
    Rational sum(0);
    Rational base(0);
    bool infinite = false;
    bool truncated = false;
    for (long j = n; j <= g; ++j) {
      for (std::size_t i = 0; i < eq.size(); ++i) {
        const Rational& p = eq.coeff(i, j);
        if (p.is_zero()) continue;
        base += p;
        if (infinite) continue;
        const Factor& b = table.factor(r, g, eq.arg(i, j));
        truncated = truncated || b.truncated;
        if (!b.positive()) {
          infinite = true;
          continue;
        }
        sum += p / *b.value;
      }
    }
    out.values.push_back(infinite ? ExtendedValue::plus_infinity(truncated)
                                  : ExtendedValue::finite(std::move(sum), truncated));
    out.base_values.push_back(ExtendedValue::finite(std::move(base)));
  }
  out.summary = summarize(out.values, out.window_start, eq.period(), Extremum::Max);
  out.base_summary = summarize(out.base_values, out.window_start, eq.period(), Extremum::Max);
  return out;
}

}  // namespace osc
