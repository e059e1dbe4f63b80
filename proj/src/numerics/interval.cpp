#include "osc/numerics/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace osc {

namespace {

std::string endpoint_str(mpfr_srcptr x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

RealInterval::RealInterval(unsigned precision_bits) : precision_(precision_bits) {
  if (precision_bits < 2) throw std::invalid_argument("precision must be at least 2 bits");
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const Rational& q, unsigned precision_bits)
    : RealInterval(precision_bits) {
  mpfr_set_q(lo_, q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.raw().get_mpq_t(), MPFR_RNDU);
}

RealInterval RealInterval::enclosing(const Rational& lo, const Rational& hi,
                                     unsigned precision_bits) {
  if (hi < lo) throw std::invalid_argument("enclosing: lower bound exceeds upper bound");
  RealInterval out(precision_bits);
  mpfr_set_q(out.lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

RealInterval::RealInterval(const RealInterval& other) : precision_(other.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : RealInterval(other.precision_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealInterval& RealInterval::operator=(RealInterval other) noexcept {
  std::swap(precision_, other.precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

int RealInterval::locate(const Rational& q) const {
  if (mpfr_cmp_q(lo_, q.raw().get_mpq_t()) > 0) return -1;
  if (mpfr_cmp_q(hi_, q.raw().get_mpq_t()) < 0) return 1;
  return 0;
}

bool RealInterval::contains(const Rational& q) const { return locate(q) == 0; }

bool RealInterval::subset_of(const RealInterval& outer) const {
  return mpfr_cmp(lo_, outer.lo_) >= 0 && mpfr_cmp(hi_, outer.hi_) <= 0;
}

bool RealInterval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

double RealInterval::width() const {
  mpfr_t w;
  mpfr_init2(w, 53);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

double RealInterval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
std::string RealInterval::lower_str(int digits) const { return endpoint_str(lo_, digits); }
std::string RealInterval::upper_str(int digits) const { return endpoint_str(hi_, digits); }

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  RealInterval out(std::max(a.precision_, b.precision_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  RealInterval out(std::max(a.precision_, b.precision_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

RealInterval RealInterval::half() const {
  RealInterval out(*this);
  mpfr_div_2ui(out.lo_, out.lo_, 1, MPFR_RNDD);
  mpfr_div_2ui(out.hi_, out.hi_, 1, MPFR_RNDU);
  return out;
}

RealInterval interval_inv_e(unsigned precision_bits) {
  if (precision_bits < 16) throw std::invalid_argument("interval_inv_e needs >= 16 bits");
  // Partial sums S_K of sum (-1)^k/k! alternate around 1/e, and
  // |S_{K+1} - S_K| = 1/(K+1)!. Stop once that gap is below 2^-(precision+2).
  const BigInt bound = BigInt(1) << (precision_bits + 2);
  mpq_class sum(1);  // k = 0
  BigInt factorial(1);
  long k = 0;
  mpq_class prev = sum;
  while (true) {
    ++k;
    factorial *= k;
    prev = sum;
    if (k % 2 == 1) {
      sum -= mpq_class(1, factorial);
    } else {
      sum += mpq_class(1, factorial);
    }
    sum.canonicalize();
    if (factorial > bound && k >= 2) break;
  }
  const mpq_class& lo = (k % 2 == 1) ? sum : prev;
  const mpq_class& hi = (k % 2 == 1) ? prev : sum;
  return RealInterval::enclosing(Rational(lo), Rational(hi), precision_bits);
}

RealInterval interval_sqrt(const Rational& x, unsigned precision_bits) {
  if (x.sign() < 0) throw std::domain_error("square root of negative rational " + x.str());
  RealInterval out(x, precision_bits);
  mpfr_sqrt(out.lo_, out.lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, out.hi_, MPFR_RNDU);
  return out;
}

}  // namespace osc
