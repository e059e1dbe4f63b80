#pragma once

#include <vector>

#include "osc/equations/equation.hpp"

namespace osc {

// Monotone envelopes of the deviating arguments on [0, horizon]:
//   retarded  phi_i(n) = max_{0<=s<=n} tau_i(s),   phi(n) = max_i phi_i(n)
//   advanced  rho_i(n) = min_{s>=n} sigma_i(s),    rho(n) = min_i rho_i(n)
struct EnvelopeTable {
  EquationKind kind = EquationKind::Retarded;
  std::vector<std::vector<long>> per_term;
  std::vector<long> combined;

  long at(long n) const { return combined.at(static_cast<std::size_t>(n)); }
  long term_at(std::size_t i, long n) const {
    return per_term.at(i).at(static_cast<std::size_t>(n));
  }
  long last_index() const { return static_cast<long>(combined.size()) - 1; }
};

/// Requires a retarded equation.
EnvelopeTable build_phi(const EquationSpec& eq);

/// Requires an advanced equation. The infinite minimum is taken over
/// s in [n, sigma_i(n) - 1]: sigma_i(s) >= s + 1 >= sigma_i(n) for larger s.
EnvelopeTable build_rho(const EquationSpec& eq);

}  // namespace osc
