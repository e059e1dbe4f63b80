#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osc/numerics/compare.hpp"
#include "osc/numerics/rational.hpp"

namespace osc {

enum class Verdict {
  OscillatoryProven,
  Inconclusive,
  NotApplicable,
  IndeterminatePrecision,
  IndicativeOnly,
};

std::string to_string(Verdict v);

/// A rational or +infinity (a nonpositive factor in the denominator).
struct ExtendedValue {
  bool infinite = false;
  Rational value;
  bool truncated = false;

  static ExtendedValue finite(Rational q, bool truncated = false) { return {false, std::move(q), truncated}; }
  static ExtendedValue plus_infinity(bool truncated = false) { return {true, Rational(0), truncated}; }

  std::string str() const;      // exact
  std::string decimal() const;  // 9 significant digits, "inf" for +infinity
  bool same_value(const ExtendedValue& other) const;
  /// Total order with +infinity on top; truncation ignored.
  int cmp(const ExtendedValue& other) const;
};

struct ComponentResult {
  std::string label;
  ExtendedValue value;
  std::string threshold;
  ComparisonVerdict comparison;
  bool exact = false;
};

struct CriterionOutcome {
  std::string id;
  int level = 0;  // r for the iterative tests, 0 otherwise
  long window_start = 0;
  std::vector<ExtendedValue> values;
  std::optional<ExtendedValue> extremal;
  bool exact = false;
  std::optional<Rational> lower_bound;  // factor-free sum, when it bounds extremal from below
  std::string threshold;
  std::optional<double> threshold_lower;  // enclosure of an irrational threshold
  std::optional<double> threshold_upper;
  std::optional<ComparisonVerdict> comparison;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<long> witnesses;
  std::vector<ComponentResult> components;
  std::vector<std::string> notes;

  bool proven() const { return verdict == Verdict::OscillatoryProven; }
};

}  // namespace osc
