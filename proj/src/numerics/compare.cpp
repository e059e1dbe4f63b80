#include "osc/numerics/compare.hpp"

#include <algorithm>

namespace osc {

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "LESS";
    case Ordering::Greater: return "GREATER";
    case Ordering::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

Threshold Threshold::exact(Rational q, std::string description) {
  if (description.empty()) description = q.str();
  return Threshold{std::move(q), std::move(description)};
}

Threshold Threshold::real(IntervalThunk thunk, std::string description) {
  return Threshold{std::move(thunk), std::move(description)};
}

Threshold Threshold::inv_e() {
  return real([](unsigned bits) { return interval_inv_e(bits); }, "1/e");
}

ComparisonVerdict compare(const Rational& value, const IntervalThunk& threshold,
                          unsigned max_precision_bits) {
  max_precision_bits = std::max(max_precision_bits, 16u);
  unsigned bits = std::min(kInitialPrecisionBits, max_precision_bits);
  while (true) {
    const RealInterval enclosure = threshold(bits);
    const int where = enclosure.locate(value);
    if (where > 0) return {Ordering::Greater, bits};
    if (where < 0) return {Ordering::Less, bits};
    // A point enclosure is the threshold itself; strict > fails on equality.
    if (enclosure.is_point()) return {Ordering::Less, bits};
    if (bits >= max_precision_bits) return {Ordering::Indeterminate, bits};
    bits = std::min(bits * 2, max_precision_bits);
  }
}

ComparisonVerdict compare(const Rational& value, const Rational& threshold) {
  return {value > threshold ? Ordering::Greater : Ordering::Less, 0};
}

ComparisonVerdict compare(const Rational& value, const Threshold& threshold,
                          unsigned max_precision_bits) {
  if (const auto* q = std::get_if<Rational>(&threshold.value)) return compare(value, *q);
  return compare(value, std::get<IntervalThunk>(threshold.value), max_precision_bits);
}

}  // namespace osc
