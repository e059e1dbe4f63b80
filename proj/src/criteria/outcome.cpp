#include "osc/criteria/outcome.hpp"

namespace osc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::OscillatoryProven: return "OSCILLATORY_PROVEN";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::IndeterminatePrecision: return "INDETERMINATE_PRECISION";
    case Verdict::IndicativeOnly: return "INDICATIVE_ONLY";
  }
  return "?";
}

std::string ExtendedValue::str() const { return infinite ? "inf" : value.str(); }

std::string ExtendedValue::decimal() const { return infinite ? "inf" : value.decimal(); }

bool ExtendedValue::same_value(const ExtendedValue& other) const {
  if (infinite || other.infinite) return infinite == other.infinite;
  return value == other.value;
}

int ExtendedValue::cmp(const ExtendedValue& other) const {
  if (infinite || other.infinite) return int(infinite) - int(other.infinite);
  if (value < other.value) return -1;
  return value == other.value ? 0 : 1;
}

}  // namespace osc
