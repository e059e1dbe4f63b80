#include "osc/equations/periodic_sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace osc {

PeriodicSequence::PeriodicSequence(std::vector<Rational> preamble, std::vector<Rational> period,
                                   long start_index)
    : preamble_(std::move(preamble)), period_(std::move(period)), start_(start_index) {
  if (period_.empty()) throw std::invalid_argument("periodic sequence needs a nonempty period");
}

PeriodicSequence PeriodicSequence::constant(Rational value, long start_index) {
  return PeriodicSequence({}, {std::move(value)}, start_index);
}

const Rational& PeriodicSequence::ref(long n) const {
  if (n < start_) {
    throw std::out_of_range("sequence index " + std::to_string(n) + " precedes start " +
                            std::to_string(start_));
  }
  const long offset = n - start_;
  const long pre = static_cast<long>(preamble_.size());
  if (offset < pre) return preamble_[static_cast<std::size_t>(offset)];
  return period_[static_cast<std::size_t>((offset - pre) % period_length())];
}

Rational PeriodicSequence::at(long n) const { return ref(n); }

bool PeriodicSequence::all_nonnegative() const {
  auto nonneg = [](const Rational& q) { return q.sign() >= 0; };
  return std::all_of(preamble_.begin(), preamble_.end(), nonneg) &&
         std::all_of(period_.begin(), period_.end(), nonneg);
}

bool PeriodicSequence::all_zero() const {
  auto zero = [](const Rational& q) { return q.is_zero(); };
  return std::all_of(preamble_.begin(), preamble_.end(), zero) &&
         std::all_of(period_.begin(), period_.end(), zero);
}

}  // namespace osc
