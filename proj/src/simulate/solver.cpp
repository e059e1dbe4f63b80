#include "osc/simulate/solver.hpp"

#include <algorithm>
#include <string>

#include "osc/equations/hypotheses.hpp"
#include "osc/error.hpp"

namespace osc {

namespace {

void require_contiguous(const InitialData& data, const char* what) {
  if (data.empty()) throw InputError(std::string(what) + " is empty");
  long expected = data.begin()->first;
  for (const auto& [n, v] : data) {
    if (n != expected) {
      throw InputError(std::string(what) + " has a gap at index " + std::to_string(expected));
    }
    ++expected;
  }
}

}  // namespace

Trace solve_retarded(const EquationSpec& eq, const InitialData& init, long upto) {
  if (!eq.retarded()) throw InputError("solve_retarded needs a retarded equation");
  if (upto < 0) throw InputError("upto must be >= 0");
  const long w = check_hypotheses(eq).initial_depth;
  std::vector<std::string> missing;
  for (long n = -w; n <= 0; ++n) {
    if (!init.count(n)) missing.push_back("missing initial value x(" + std::to_string(n) + ")");
  }
  if (!missing.empty()) throw InputError("incomplete initial data", missing);
  for (const auto& [n, v] : init) {
    if (n > 0) throw InputError("initial data may only cover indices <= 0, got " + std::to_string(n));
  }
  require_contiguous(init, "initial data");

  Trace t;
  t.kind = EquationKind::Retarded;
  t.first_index = init.begin()->first;
  for (const auto& [n, v] : init) t.values.push_back(v);
  t.values.reserve(t.values.size() + static_cast<std::size_t>(upto));
  for (long n = 0; n < upto; ++n) {
    Rational next = t.at(n);
    for (std::size_t i = 0; i < eq.size(); ++i) {
      const Rational& p = eq.coeff(i, n);
      if (p.is_zero()) continue;
      const long arg = eq.arg(i, n);
      if (arg >= n + 1 || !t.contains(arg)) {
        throw InputError("x(" + std::to_string(arg) + ") is needed at step n = " + std::to_string(n) +
                         " but is not available");
      }
      next -= p * t.at(arg);
    }
    t.values.push_back(std::move(next));
  }
  t.finalize();
  return t;
}

Trace solve_advanced(const EquationSpec& eq, const InitialData& terminal, long downto) {
  if (eq.retarded()) throw InputError("solve_advanced needs an advanced equation");
  require_contiguous(terminal, "terminal data");
  const long a = terminal.begin()->first;
  if (downto > a) throw InputError("downto must not exceed the first terminal index");
  if (downto < -1) throw InputError("downto must be >= -1");

  // Fill from the top; values[k] is x(downto + k).
  const long b = terminal.rbegin()->first;
  std::vector<std::optional<Rational>> slots(static_cast<std::size_t>(b - downto + 1));
  auto slot = [&](long n) -> std::optional<Rational>& { return slots[static_cast<std::size_t>(n - downto)]; };
  for (const auto& [n, v] : terminal) slot(n) = v;
  for (long n = a; n > downto; --n) {
    Rational prev = *slot(n);
    for (std::size_t i = 0; i < eq.size(); ++i) {
      const Rational& p = eq.coeff(i, n);
      if (p.is_zero()) continue;
      const long arg = eq.arg(i, n);
      if (arg <= n - 1 || arg > b || !slot(arg)) {
        throw InputError("x(" + std::to_string(arg) + ") is needed at step n = " + std::to_string(n) +
                         " but is not available");
      }
      prev -= p * *slot(arg);
    }
    slot(n - 1) = std::move(prev);
  }
  Trace t;
  t.kind = EquationKind::Advanced;
  t.first_index = downto;
  for (auto& v : slots) t.values.push_back(std::move(*v));
  t.finalize();
  return t;
}

std::optional<Rational> residual(const EquationSpec& eq, const Trace& trace, long n) {
  const long other = eq.retarded() ? n + 1 : n - 1;
  if (!trace.contains(n) || !trace.contains(other)) return std::nullopt;
  Rational r = trace.at(other) - trace.at(n);
  for (std::size_t i = 0; i < eq.size(); ++i) {
    const Rational& p = eq.coeff(i, n);
    if (p.is_zero()) continue;
    const long arg = eq.arg(i, n);
    if (!trace.contains(arg)) return std::nullopt;
    r += p * trace.at(arg);
  }
  return r;
}

TraceCheck check_trace(const EquationSpec& eq, const Trace& trace) {
  TraceCheck out;
  for (long n = std::max(0L, trace.first_index); n <= trace.last_index(); ++n) {
    auto r = residual(eq, trace, n);
    if (!r) continue;
    ++out.checked;
    if (!r->is_zero()) {
      out.ok = false;
      out.first_failure = n;
      out.failing_residual = *r;
      break;
    }
  }
  return out;
}

long default_settle(const EquationSpec& eq) { return eq.stable_start() + 4 * eq.period(); }

}  // namespace osc
