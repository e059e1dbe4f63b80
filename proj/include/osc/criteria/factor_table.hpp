#pragma once

/**
 * @file factor_table.hpp
 * @brief Memoized Gronwall factors of the iterative oscillation tests.
 *
 * Retarded (k <= n):
 *   a_1(n,k)     = prod_{i=k}^{n-1} [1 - sum_l p_l(i)]
 *   a_{r+1}(n,k) = prod_{i=k}^{n-1} [1 - sum_l p_l(i) / a_r(i, tau_l(i))]
 * Advanced (k >= n):
 *   b_1(n,k)     = prod_{i=n+1}^{k} [1 - sum_l p_l(i)]
 *   b_{r+1}(n,k) = prod_{i=n+1}^{k} [1 - sum_l p_l(i) / b_r(i, sigma_l(i))]
 *
 * A bracket <= 0, or a bracket referencing a nonpositive factor, makes every
 * product through it NONPOSITIVE: no positive solution can follow that
 * chain. Products reaching outside the data (indices below 0 for retarded
 * equations, past the horizon for advanced ones with CONSTANT cases) are
 * clamped and flagged as truncated. Truncated values never decide a
 * verdict, so they are rounded to kTruncatedBits significant bits; exact
 * chains behind CONSTANT cases otherwise grow like n^r digits.
 */

#include <cstddef>
#include <optional>
#include <unordered_map>

#include "osc/equations/equation.hpp"

namespace osc {

struct Factor {
  std::optional<Rational> value;  // empty means NONPOSITIVE
  bool truncated = false;

  bool positive() const { return value.has_value(); }
};

class FactorTable {
 public:
  static constexpr long kTruncatedBits = 256;

  FactorTable(EquationSpec eq, int max_r);

  EquationKind direction() const { return eq_.kind(); }
  int max_r() const { return max_r_; }
  const EquationSpec& equation() const { return eq_; }

  /// a_r(n,k) for retarded, b_r(n,k) for advanced equations.
  const Factor& factor(int r, long n, long k);
  /// The i-th bracket of the level-r product.
  const Factor& bracket(int r, long i);

  std::size_t memo_size() const { return factors_.size() + brackets_.size(); }

 private:
  struct Key {
    int r;
    long n;
    long k;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };

  void check_level(int r) const;

  EquationSpec eq_;
  int max_r_;
  long upper_limit_;
  std::unordered_map<Key, Factor, KeyHash> factors_;
  std::unordered_map<Key, Factor, KeyHash> brackets_;
};

/// a_r(n,k); requires a retarded table and k <= n (std::out_of_range otherwise).
const Factor& factor_a(FactorTable& table, int r, long n, long k);
/// b_r(n,k); requires an advanced table and k >= n (std::out_of_range otherwise).
const Factor& factor_b(FactorTable& table, int r, long n, long k);

}  // namespace osc
