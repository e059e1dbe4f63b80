#include "osc/equations/argument_rule.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace osc {

const char* to_string(EquationKind kind) {
  return kind == EquationKind::Retarded ? "retarded" : "advanced";
}

ArgumentRule::ArgumentRule(std::vector<ArgumentCase> cases, std::map<long, long> overrides)
    : cases_(std::move(cases)), overrides_(std::move(overrides)) {
  if (cases_.empty()) throw std::invalid_argument("argument rule needs at least one case");
}

const ArgumentCase& ArgumentRule::case_for(long n) const {
  const long p = modulus();
  return cases_[static_cast<std::size_t>(((n % p) + p) % p)];
}

long ArgumentRule::at(long n, EquationKind kind) const {
  if (auto it = overrides_.find(n); it != overrides_.end()) return it->second;
  const ArgumentCase& c = case_for(n);
  if (c.kind == ArgumentCase::Kind::Constant) return c.value;
  return kind == EquationKind::Retarded ? n - c.value : n + c.value;
}

bool ArgumentRule::has_constant() const {
  return std::any_of(cases_.begin(), cases_.end(),
                     [](const ArgumentCase& c) { return c.kind == ArgumentCase::Kind::Constant; });
}

long ArgumentRule::max_offset() const {
  long d = 0;
  for (const auto& c : cases_) {
    if (c.kind == ArgumentCase::Kind::Offset) d = std::max(d, c.value);
  }
  return d;
}

std::optional<long> ArgumentRule::deviation_bound() const {
  if (has_constant()) return std::nullopt;
  long d = max_offset();
  for (const auto& [n, v] : overrides_) d = std::max(d, std::labs(n - v));
  return d;
}

long ArgumentRule::stable_from() const {
  return overrides_.empty() ? 0 : std::max(0L, overrides_.rbegin()->first + 1);
}

}  // namespace osc
