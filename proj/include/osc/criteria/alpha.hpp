#pragma once

/**
 * @file alpha.hpp
 * @brief The liminf quantity alpha and the lower ratio bound c(alpha).
 *
 * Retarded: alpha_i = liminf sum_{j=phi_i(n)}^{n-1} p_i(j)
 * Advanced: alpha_i = liminf sum_{j=n+1}^{rho_i(n)} p_i(j)
 * alpha = min_i alpha_i, and
 *   c(alpha) = (1 - alpha - sqrt(1 - 2 alpha - alpha^2)) / 2.
 */

#include <optional>
#include <vector>

#include "osc/criteria/outcome.hpp"
#include "osc/equations/envelope.hpp"
#include "osc/numerics/interval.hpp"

namespace osc {

struct AlphaReport {
  std::vector<Rational> per_term;
  std::vector<bool> per_term_exact;
  Rational alpha;
  bool exact = false;
  long window_start = 0;
};

AlphaReport alpha_retarded(const EquationSpec& eq, const EnvelopeTable& phi);
AlphaReport alpha_advanced(const EquationSpec& eq, const EnvelopeTable& rho);

/// alpha >= 0 and 1 - 2 alpha - alpha^2 >= 0, decided exactly.
bool alpha_in_domain(const Rational& alpha);

/// Enclosure of c(alpha); empty outside the domain. c(0) = [0, 0].
std::optional<RealInterval> lower_ratio_bound(const Rational& alpha, unsigned precision_bits);
/// Enclosure of 1 - c(alpha); empty outside the domain.
std::optional<RealInterval> one_minus_lower_ratio_bound(const Rational& alpha, unsigned precision_bits);

}  // namespace osc
