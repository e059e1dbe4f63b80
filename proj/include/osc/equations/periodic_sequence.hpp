#pragma once

#include <vector>

#include "osc/numerics/rational.hpp"

namespace osc {

// Eventually periodic sequence: preamble values from start_index, then the
// period block repeated forever.
class PeriodicSequence {
 public:
  PeriodicSequence(std::vector<Rational> preamble, std::vector<Rational> period,
                   long start_index = 0);
  static PeriodicSequence constant(Rational value, long start_index = 0);

  /// Value at n; throws std::out_of_range for n < start_index.
  Rational at(long n) const;
  const Rational& ref(long n) const;

  const std::vector<Rational>& preamble() const { return preamble_; }
  const std::vector<Rational>& period() const { return period_; }
  long start_index() const { return start_; }
  long stable_from() const { return start_ + static_cast<long>(preamble_.size()); }
  long period_length() const { return static_cast<long>(period_.size()); }
  bool all_nonnegative() const;
  bool all_zero() const;

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  std::vector<Rational> preamble_;
  std::vector<Rational> period_;
  long start_;
};

}  // namespace osc
