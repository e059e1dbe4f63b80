#pragma once

/**
 * @file equation.hpp
 * @brief Linear difference equations with several deviating arguments.
 *
 * Retarded:  x(n+1) - x(n) + sum_i p_i(n) x(tau_i(n))   = 0,  n >= 0
 * Advanced:  x(n) - x(n-1) - sum_i p_i(n) x(sigma_i(n)) = 0,  n >= 1
 *
 * Coefficients are eventually periodic exact rationals; arguments are
 * residue-class rules. Every equation is validated on construction over the
 * analysis window [0, horizon] and is immutable afterwards.
 */

#include <optional>
#include <vector>

#include "osc/equations/argument_rule.hpp"
#include "osc/equations/periodic_sequence.hpp"

namespace osc {

struct Term {
  PeriodicSequence coeff;
  ArgumentRule arg;

  friend bool operator==(const Term&, const Term&) = default;
};

class EquationSpec {
 public:
  /// Throws ValidationError listing every violated constraint.
  EquationSpec(EquationKind kind, std::vector<Term> terms, std::optional<long> horizon = {});

  /// preamble + 10 * lcm(periods) + 10 * max deviation.
  static long default_horizon(const std::vector<Term>& terms);

  EquationSpec with_horizon(long horizon) const;

  EquationKind kind() const { return kind_; }
  bool retarded() const { return kind_ == EquationKind::Retarded; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  long horizon() const { return horizon_; }

  /// p_i(n) for 0 <= n <= horizon; std::out_of_range otherwise.
  Rational eval_coeff(std::size_t i, long n) const;
  /// tau_i(n) or sigma_i(n) for 0 <= n <= horizon; std::out_of_range otherwise.
  long eval_arg(std::size_t i, long n) const;

  // Unchecked forms used past the horizon, where the periodic rules still
  // define every value.
  const Rational& coeff(std::size_t i, long n) const;
  long arg(std::size_t i, long n) const { return terms_[i].arg.at(n, kind_); }
  Rational coeff_sum(long n) const;

  /// lcm of all coefficient periods and argument moduli.
  long period() const;
  /// First index from which coefficients and argument cases are purely periodic.
  long stable_start() const;
  /// Largest OFFSET deviation over all terms.
  long max_offset() const;
  bool offset_only() const;

  friend bool operator==(const EquationSpec&, const EquationSpec&) = default;

 private:
  void check_index(long n) const;

  EquationKind kind_;
  std::vector<Term> terms_;
  long horizon_;
};

}  // namespace osc
