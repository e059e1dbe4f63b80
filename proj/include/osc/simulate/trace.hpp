#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osc/equations/argument_rule.hpp"
#include "osc/numerics/rational.hpp"

namespace osc {

/// Index -> value. Retarded solves need [-w, 0]; advanced ones a terminal block.
using InitialData = std::map<long, Rational>;

/// Exact solution values x(first_index), ..., x(last_index()).
struct Trace {
  EquationKind kind = EquationKind::Retarded;
  long first_index = 0;
  std::vector<Rational> values;

  // Filled by finalize().
  std::vector<long> sign_changes;  // n with sign x(n) opposite to the previous nonzero value
  std::optional<long> eventually_positive_from;
  std::optional<long> eventually_negative_from;
  std::optional<long> positivity_window;  // start of the maximal strictly one-signed suffix

  long last_index() const { return first_index + static_cast<long>(values.size()) - 1; }
  bool contains(long n) const { return n >= first_index && n <= last_index(); }
  const Rational& at(long n) const;

  void finalize();
};

enum class Evidence { OscillatingEvidence, NonoscEvidence, Degenerate };

std::string to_string(Evidence e);

struct OscillationReport {
  Evidence evidence = Evidence::Degenerate;
  long settle = 0;
  std::vector<long> sign_changes_after_settle;
};

/// Evidence only: sign changes past `settle`, never a proof.
OscillationReport detect_oscillation(const Trace& trace, long settle);

}  // namespace osc
