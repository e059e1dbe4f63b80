#pragma once

/**
 * @file solver.hpp
 * @brief Exact recurrences.
 *
 * Retarded: x(n+1) = x(n) - sum_i p_i(n) x(tau_i(n)), forward from n = 0.
 * Advanced: x(n-1) = x(n) - sum_i p_i(n) x(sigma_i(n)), backward from a
 * terminal block.
 */

#include <optional>

#include "osc/equations/equation.hpp"
#include "osc/simulate/trace.hpp"

namespace osc {

/// init must hold x on [-w, 0] contiguously (InputError otherwise).
Trace solve_retarded(const EquationSpec& eq, const InitialData& init, long upto);

/// terminal must hold x on a contiguous block [a, b]; values are produced
/// for a-1 down to downto. Reading an index outside the known values is an
/// InputError.
Trace solve_advanced(const EquationSpec& eq, const InitialData& terminal, long downto);

/// Retarded: x(n+1) - x(n) + sum p_i(n) x(tau_i(n)).
/// Advanced: x(n-1) - x(n) + sum p_i(n) x(sigma_i(n)).
/// Empty if the trace misses a referenced value.
std::optional<Rational> residual(const EquationSpec& eq, const Trace& trace, long n);

struct TraceCheck {
  bool ok = true;
  long checked = 0;  // number of residuals evaluated
  std::optional<long> first_failure;
  std::optional<Rational> failing_residual;
};

/// Checks every residual the trace fully determines.
TraceCheck check_trace(const EquationSpec& eq, const Trace& trace);

/// Default settle index for detect_oscillation: stable start + 4 periods.
long default_settle(const EquationSpec& eq);

}  // namespace osc
