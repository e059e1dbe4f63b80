#include "osc/equations/envelope.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace osc {

EnvelopeTable build_phi(const EquationSpec& eq) {
  if (!eq.retarded()) throw std::invalid_argument("build_phi needs a retarded equation");
  const auto width = static_cast<std::size_t>(eq.horizon() + 1);
  EnvelopeTable env;
  env.kind = EquationKind::Retarded;
  env.per_term.assign(eq.size(), std::vector<long>(width));
  env.combined.assign(width, 0);
  for (std::size_t i = 0; i < eq.size(); ++i) {
    long running = eq.arg(i, 0);
    for (std::size_t n = 0; n < width; ++n) {
      running = std::max(running, eq.arg(i, static_cast<long>(n)));
      env.per_term[i][n] = running;
    }
  }
  for (std::size_t n = 0; n < width; ++n) {
    long m = env.per_term[0][n];
    for (std::size_t i = 1; i < eq.size(); ++i) m = std::max(m, env.per_term[i][n]);
    env.combined[n] = m;
    assert(m <= static_cast<long>(n) - 1);
  }
  return env;
}

EnvelopeTable build_rho(const EquationSpec& eq) {
  if (eq.retarded()) throw std::invalid_argument("build_rho needs an advanced equation");
  const auto width = static_cast<std::size_t>(eq.horizon() + 1);
  EnvelopeTable env;
  env.kind = EquationKind::Advanced;
  env.per_term.assign(eq.size(), std::vector<long>(width));
  env.combined.assign(width, 0);
  for (std::size_t i = 0; i < eq.size(); ++i) {
    for (std::size_t n = 0; n < width; ++n) {
      const long first = static_cast<long>(n);
      const long sigma_n = eq.arg(i, first);
      long m = sigma_n;
      for (long s = first + 1; s <= sigma_n - 1; ++s) m = std::min(m, eq.arg(i, s));
      env.per_term[i][n] = m;
    }
  }
  for (std::size_t n = 0; n < width; ++n) {
    long m = env.per_term[0][n];
    for (std::size_t i = 1; i < eq.size(); ++i) m = std::min(m, env.per_term[i][n]);
    env.combined[n] = m;
    assert(m >= static_cast<long>(n) + 1);
  }
  return env;
}

}  // namespace osc
