#include "osc/criteria/factor_table.hpp"

#include <mpfr.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace osc {

namespace {

void coarsen(Rational& value) {
  const mpq_class& q = value.raw();
  if (mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2) <=
      static_cast<std::size_t>(4 * FactorTable::kTruncatedBits)) {
    return;
  }
  mpfr_t f;
  mpfr_init2(f, FactorTable::kTruncatedBits);
  mpfr_set_q(f, q.get_mpq_t(), MPFR_RNDN);
  mpq_class out;
  mpfr_get_q(out.get_mpq_t(), f);
  mpfr_clear(f);
  value = Rational(out);
}

}  // namespace

std::size_t FactorTable::KeyHash::operator()(const Key& key) const noexcept {
  std::size_t h = static_cast<std::size_t>(key.r);
  h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(key.n);
  h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(key.k);
  return h ^ (h >> 29);
}

FactorTable::FactorTable(EquationSpec eq, int max_r) : eq_(std::move(eq)), max_r_(max_r) {
  if (max_r_ < 1) throw std::invalid_argument("factor table needs max_r >= 1");
  // Advanced CONSTANT cases are only valid up to the horizon.
  upper_limit_ = (!eq_.retarded() && !eq_.offset_only()) ? eq_.horizon()
                                                         : std::numeric_limits<long>::max();
}

void FactorTable::check_level(int r) const {
  if (r < 1 || r > max_r_) {
    throw std::out_of_range("factor level " + std::to_string(r) + " outside [1, " +
                            std::to_string(max_r_) + "]");
  }
}

const Factor& FactorTable::bracket(int r, long i) {
  check_level(r);
  const Key key{r, i, 0};
  if (auto it = brackets_.find(key); it != brackets_.end()) return it->second;

  Factor out;
  Rational value(1);
  bool nonpositive = false;
  for (std::size_t l = 0; l < eq_.size() && !nonpositive; ++l) {
    const Rational& p = eq_.coeff(l, i);
    if (p.is_zero()) continue;
    if (r == 1) {
      value -= p;
      continue;
    }
    const long arg = eq_.arg(l, i);
    const Factor& inner = factor(r - 1, i, arg);
    out.truncated = out.truncated || inner.truncated;
    if (!inner.positive()) {
      nonpositive = true;
      break;
    }
    value -= p / *inner.value;
  }
  if (!nonpositive && value.sign() > 0) {
    if (out.truncated) coarsen(value);
    out.value = std::move(value);
  }
  return brackets_.emplace(key, std::move(out)).first->second;
}

const Factor& FactorTable::factor(int r, long n, long k) {
  check_level(r);
  const bool retarded = eq_.retarded();
  if (retarded ? k > n : k < n) {
    throw std::out_of_range(std::string(retarded ? "a_r(n,k) needs k <= n" : "b_r(n,k) needs k >= n") +
                            " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  const Key key{r, n, k};
  if (auto it = factors_.find(key); it != factors_.end()) return it->second;

  Factor out;
  long lo = 0;
  long hi = 0;  // product over brackets i in [lo, hi)
  if (retarded) {
    lo = k;
    hi = n;
    if (lo < 0) {
      lo = 0;
      out.truncated = true;
    }
  } else {
    lo = n + 1;
    hi = k + 1;
    if (k > upper_limit_) {
      hi = upper_limit_ + 1;
      out.truncated = true;
    }
  }
  Rational value(1);
  bool nonpositive = false;
  for (long i = lo; i < hi; ++i) {
    const Factor& b = bracket(r, i);
    out.truncated = out.truncated || b.truncated;
    if (!b.positive()) {
      nonpositive = true;
      break;
    }
    value *= *b.value;
  }
  if (!nonpositive) {
    if (out.truncated) coarsen(value);
    out.value = std::move(value);
  }
  return factors_.emplace(key, std::move(out)).first->second;
}

const Factor& factor_a(FactorTable& table, int r, long n, long k) {
  if (table.direction() != EquationKind::Retarded) {
    throw std::invalid_argument("factor_a needs a retarded equation");
  }
  return table.factor(r, n, k);
}

const Factor& factor_b(FactorTable& table, int r, long n, long k) {
  if (table.direction() != EquationKind::Advanced) {
    throw std::invalid_argument("factor_b needs an advanced equation");
  }
  return table.factor(r, n, k);
}

}  // namespace osc
