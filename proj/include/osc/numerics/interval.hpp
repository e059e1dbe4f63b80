#pragma once

/**
 * @file interval.hpp
 * @brief Outward-rounded real intervals over MPFR.
 *
 * Every constructor and operation rounds the lower endpoint toward -inf and
 * the upper endpoint toward +inf, so the exact real value is always inside.
 */

#include <mpfr.h>

#include <string>

#include "osc/numerics/rational.hpp"

namespace osc {

class RealInterval {
 public:
  explicit RealInterval(unsigned precision_bits);
  /// Tightest enclosure of q at the given precision.
  RealInterval(const Rational& q, unsigned precision_bits);
  /// Enclosure of the real segment [lo, hi]; requires lo <= hi.
  static RealInterval enclosing(const Rational& lo, const Rational& hi, unsigned precision_bits);
  RealInterval(const RealInterval& other);
  RealInterval(RealInterval&& other) noexcept;
  RealInterval& operator=(RealInterval other) noexcept;
  ~RealInterval();

  unsigned precision_bits() const { return precision_; }

  bool contains(const Rational& q) const;
  /// True when this interval lies inside `outer`.
  bool subset_of(const RealInterval& outer) const;
  bool is_point() const;

  /// Compare q against the endpoints exactly: -1 if q < lower, +1 if q > upper, else 0.
  int locate(const Rational& q) const;

  /// Upper bound on (upper - lower), rounded up.
  double width() const;
  double lower_double() const;
  double upper_double() const;
  std::string lower_str(int digits = 20) const;
  std::string upper_str(int digits = 20) const;

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  /// Exact division by two (a binary shift).
  RealInterval half() const;

  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }

 private:
  friend RealInterval interval_sqrt(const Rational& x, unsigned precision_bits);

  unsigned precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Enclosure of 1/e from the alternating series sum (-1)^k / k!.
/// Requires precision_bits >= 16; width <= 2^(2 - precision_bits).
RealInterval interval_inv_e(unsigned precision_bits);

/// Enclosure of sqrt(x) for x >= 0; throws std::domain_error otherwise.
RealInterval interval_sqrt(const Rational& x, unsigned precision_bits);

}  // namespace osc
