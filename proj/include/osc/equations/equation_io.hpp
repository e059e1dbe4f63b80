#pragma once

/**
 * @file equation_io.hpp
 * @brief JSON equation files.
 *
 *   {
 *     "kind": "retarded" | "advanced",
 *     "horizon": 60,                               (optional)
 *     "params": {"p": "7/40"},                     (optional, default values)
 *     "terms": [
 *       {"coeff": {"preamble": ["1/2"], "period": ["$p", "3/10"], "start": 0},
 *        "arg":   {"modulus": 2,
 *                  "cases": [{"kind": "offset", "value": 3},
 *                            {"kind": "constant", "value": -1}],
 *                  "overrides": [[4, 1]]}}
 *     ]
 *   }
 *
 * Rationals are strings "p/q" or "p". A coefficient slot "$name" refers to
 * a declared parameter. Unknown fields are rejected.
 */

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osc/equations/equation.hpp"

namespace osc {

using ParamBindings = std::map<std::string, Rational>;

class EquationDocument {
 public:
  /// Structural parse; throws InputError collecting every schema issue.
  static EquationDocument parse(const nlohmann::json& doc);
  static EquationDocument load(const std::filesystem::path& path);

  const ParamBindings& params() const { return params_; }
  bool has_param(const std::string& name) const { return params_.count(name) != 0; }
  const std::string& name() const { return name_; }

  /// Substitutes parameters (defaults overridden by `bindings`) and validates.
  EquationSpec instantiate(const ParamBindings& bindings = {}) const;

 private:
  struct Slot {
    std::optional<Rational> value;
    std::string param;
  };
  struct TermDoc {
    std::vector<Slot> preamble;
    std::vector<Slot> period;
    long start = 0;
    std::vector<ArgumentCase> cases;
    std::map<long, long> overrides;
  };

  EquationKind kind_ = EquationKind::Retarded;
  std::optional<long> horizon_;
  std::string name_;
  ParamBindings params_;
  std::vector<TermDoc> terms_;
};

EquationSpec parse_equation(const nlohmann::json& doc);
EquationSpec load_equation(const std::filesystem::path& path);
nlohmann::json to_json(const EquationSpec& eq);

/// Reads a whole JSON file; InputError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace osc
