#include "osc/equations/equation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "osc/error.hpp"

namespace osc {

namespace {

long lcm_of_terms(const std::vector<Term>& terms) {
  long l = 1;
  for (const auto& t : terms) {
    l = std::lcm(l, t.coeff.period_length());
    l = std::lcm(l, t.arg.modulus());
  }
  return l;
}

long stable_of_terms(const std::vector<Term>& terms) {
  long s = 0;
  for (const auto& t : terms) {
    s = std::max({s, t.coeff.stable_from(), t.arg.stable_from()});
  }
  return s;
}

std::vector<std::string> validate(EquationKind kind, const std::vector<Term>& terms, long horizon) {
  std::vector<std::string> issues;
  if (terms.empty()) issues.emplace_back("terms: at least one term is required");
  if (horizon < 1) issues.emplace_back("horizon: must be positive");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    const Term& t = terms[i];
    if (!t.coeff.all_nonnegative()) issues.push_back(where + ".coeff: negative coefficient");
    if (t.coeff.start_index() > 0) {
      issues.push_back(where + ".coeff: sequence must start at or before index 0");
    }
    for (std::size_t c = 0; c < t.arg.cases().size(); ++c) {
      const auto& ac = t.arg.cases()[c];
      if (ac.kind == ArgumentCase::Kind::Offset && ac.value < 1) {
        issues.push_back(where + ".arg.cases[" + std::to_string(c) +
                         "]: offset must be a positive integer");
      }
    }
    for (const auto& [n, v] : t.arg.overrides()) {
      const bool ok = kind == EquationKind::Retarded ? v <= n - 1 : v >= n + 1;
      if (n < 0 || !ok) {
        issues.push_back(where + ".arg.overrides: (" + std::to_string(n) + ", " +
                         std::to_string(v) + ") violates the argument direction");
      }
    }
    if (horizon < 1) continue;
    for (long n = 0; n <= horizon; ++n) {
      const long a = t.arg.at(n, kind);
      const bool ok = kind == EquationKind::Retarded ? a <= n - 1 : a >= n + 1;
      if (!ok) {
        issues.push_back(where + ".arg: value " + std::to_string(a) + " at n=" +
                         std::to_string(n) + " violates " +
                         (kind == EquationKind::Retarded ? "arg(n) <= n-1" : "arg(n) >= n+1"));
        break;
      }
    }
  }
  return issues;
}

}  // namespace

long EquationSpec::default_horizon(const std::vector<Term>& terms) {
  long preamble = 0;
  long deviation = 1;
  for (const auto& t : terms) {
    preamble = std::max({preamble, t.coeff.stable_from(), t.arg.stable_from()});
    deviation = std::max(deviation, t.arg.deviation_bound().value_or(t.arg.max_offset()));
  }
  return preamble + 10 * lcm_of_terms(terms) + 10 * deviation;
}

EquationSpec::EquationSpec(EquationKind kind, std::vector<Term> terms, std::optional<long> horizon)
    : kind_(kind), terms_(std::move(terms)) {
  horizon_ = horizon ? *horizon : (terms_.empty() ? 0 : default_horizon(terms_));
  auto issues = validate(kind_, terms_, horizon_);
  if (!issues.empty()) {
    std::string msg = "invalid equation: " + issues.front();
    if (issues.size() > 1) msg += " (and " + std::to_string(issues.size() - 1) + " more)";
    throw ValidationError(msg, std::move(issues));
  }
}

EquationSpec EquationSpec::with_horizon(long horizon) const {
  return EquationSpec(kind_, terms_, horizon);
}

void EquationSpec::check_index(long n) const {
  if (n < 0 || n > horizon_) {
    throw std::out_of_range("index " + std::to_string(n) + " outside horizon [0, " +
                            std::to_string(horizon_) + "]");
  }
}

Rational EquationSpec::eval_coeff(std::size_t i, long n) const {
  check_index(n);
  return terms_.at(i).coeff.at(n);
}

long EquationSpec::eval_arg(std::size_t i, long n) const {
  check_index(n);
  return terms_.at(i).arg.at(n, kind_);
}

const Rational& EquationSpec::coeff(std::size_t i, long n) const { return terms_[i].coeff.ref(n); }

Rational EquationSpec::coeff_sum(long n) const {
  Rational s;
  for (std::size_t i = 0; i < terms_.size(); ++i) s += coeff(i, n);
  return s;
}

long EquationSpec::period() const { return lcm_of_terms(terms_); }

long EquationSpec::stable_start() const { return stable_of_terms(terms_); }

long EquationSpec::max_offset() const {
  long d = 0;
  for (const auto& t : terms_) d = std::max(d, t.arg.max_offset());
  return d;
}

bool EquationSpec::offset_only() const {
  return std::none_of(terms_.begin(), terms_.end(),
                      [](const Term& t) { return t.arg.has_constant(); });
}

}  // namespace osc
