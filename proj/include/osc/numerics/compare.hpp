#pragma once

#include <functional>
#include <string>
#include <variant>

#include "osc/numerics/interval.hpp"
#include "osc/numerics/rational.hpp"

namespace osc {

enum class Ordering { Less, Greater, Indeterminate };

std::string to_string(Ordering o);

// Outcome of a strict test "value > threshold". LESS means the strict
// inequality fails (including equality with an exactly known threshold).
struct ComparisonVerdict {
  Ordering outcome = Ordering::Indeterminate;
  unsigned precision_used = 0;  // 0 for exact rational comparisons
};

using IntervalThunk = std::function<RealInterval(unsigned precision_bits)>;

// A comparand that is either an exact rational or an irrational real given
// by nested enclosures at increasing precision.
struct Threshold {
  std::variant<Rational, IntervalThunk> value;
  std::string description;

  static Threshold exact(Rational q, std::string description = {});
  static Threshold real(IntervalThunk thunk, std::string description);
  static Threshold inv_e();

  bool is_exact() const { return std::holds_alternative<Rational>(value); }
};

inline constexpr unsigned kDefaultMaxPrecisionBits = 4096;
inline constexpr unsigned kInitialPrecisionBits = 64;

/// Decides value > threshold. Precision doubles from 64 bits up to
/// max_precision_bits; INDETERMINATE only if the enclosure still straddles
/// value at the maximum.
ComparisonVerdict compare(const Rational& value, const IntervalThunk& threshold,
                          unsigned max_precision_bits = kDefaultMaxPrecisionBits);

/// Exact fast path: GREATER iff value > threshold, otherwise LESS.
ComparisonVerdict compare(const Rational& value, const Rational& threshold);

ComparisonVerdict compare(const Rational& value, const Threshold& threshold,
                          unsigned max_precision_bits = kDefaultMaxPrecisionBits);

}  // namespace osc
