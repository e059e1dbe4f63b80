#include "osc/simulate/trace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace osc {

const Rational& Trace::at(long n) const {
  if (!contains(n)) throw std::out_of_range("trace has no value at index " + std::to_string(n));
  return values[static_cast<std::size_t>(n - first_index)];
}

void Trace::finalize() {
  sign_changes.clear();
  int previous = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int s = values[k].sign();
    if (s == 0) continue;
    if (previous != 0 && s != previous) sign_changes.push_back(first_index + static_cast<long>(k));
    previous = s;
  }

  positivity_window.reset();
  eventually_positive_from.reset();
  eventually_negative_from.reset();
  if (values.empty()) return;
  const int tail = values.back().sign();
  if (tail == 0) return;
  std::size_t k = values.size();
  while (k > 0 && values[k - 1].sign() == tail) --k;
  const long from = first_index + static_cast<long>(k);
  positivity_window = from;
  (tail > 0 ? eventually_positive_from : eventually_negative_from) = from;
}

std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::OscillatingEvidence: return "OSCILLATING_EVIDENCE";
    case Evidence::NonoscEvidence: return "NONOSC_EVIDENCE";
    case Evidence::Degenerate: return "DEGENERATE";
  }
  return "?";
}

OscillationReport detect_oscillation(const Trace& trace, long settle) {
  if (trace.values.empty() || settle >= trace.last_index()) {
    throw std::invalid_argument("trace must extend past the settle index " + std::to_string(settle));
  }
  OscillationReport out;
  out.settle = settle;
  int previous = 0;
  bool any_sign = false;
  for (long n = std::max(settle, trace.first_index); n <= trace.last_index(); ++n) {
    const int s = trace.at(n).sign();
    if (s == 0) continue;
    any_sign = true;
    if (previous != 0 && s != previous) out.sign_changes_after_settle.push_back(n);
    previous = s;
  }
  if (!any_sign) {
    out.evidence = Evidence::Degenerate;
  } else {
    out.evidence = out.sign_changes_after_settle.empty() ? Evidence::NonoscEvidence
                                                         : Evidence::OscillatingEvidence;
  }
  return out;
}

}  // namespace osc
