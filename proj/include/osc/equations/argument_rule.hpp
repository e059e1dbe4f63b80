#pragma once

#include <map>
#include <optional>
#include <vector>

namespace osc {

enum class EquationKind { Retarded, Advanced };

const char* to_string(EquationKind kind);

struct ArgumentCase {
  enum class Kind { Offset, Constant };
  Kind kind = Kind::Offset;
  long value = 1;  // d for OFFSET, c for CONSTANT

  static ArgumentCase offset(long d) { return {Kind::Offset, d}; }
  static ArgumentCase constant(long c) { return {Kind::Constant, c}; }
  friend bool operator==(const ArgumentCase&, const ArgumentCase&) = default;
};

// Deviating argument by residue class n mod P, with finitely many
// pointwise overrides. OFFSET d means n-d for retarded equations and n+d
// for advanced ones.
class ArgumentRule {
 public:
  ArgumentRule(std::vector<ArgumentCase> cases, std::map<long, long> overrides = {});
  static ArgumentRule offset(long d) { return ArgumentRule({ArgumentCase::offset(d)}); }

  long at(long n, EquationKind kind) const;

  long modulus() const { return static_cast<long>(cases_.size()); }
  const std::vector<ArgumentCase>& cases() const { return cases_; }
  const std::map<long, long>& overrides() const { return overrides_; }
  const ArgumentCase& case_for(long n) const;

  bool has_constant() const;
  /// Largest d over OFFSET cases (0 if none).
  long max_offset() const;
  /// Uniform bound on |n - arg(n)|; empty when a CONSTANT case makes it unbounded.
  std::optional<long> deviation_bound() const;
  /// First index from which no override applies.
  long stable_from() const;

  friend bool operator==(const ArgumentRule&, const ArgumentRule&) = default;

 private:
  std::vector<ArgumentCase> cases_;
  std::map<long, long> overrides_;
};

}  // namespace osc
