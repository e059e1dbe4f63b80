#pragma once

/**
 * @file certificate.hpp
 * @brief Eventually periodic solutions checked by exact residuals.
 *
 * A certificate lists x(start), x(start+1), ... as a preamble followed by a
 * repeating period. Past n_s = max(0, stable start, first periodic index + D)
 * every residual is periodic in n with L = lcm(equation period, certificate
 * period), so checking [0, n_s + L) settles every n >= 0.
 */

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osc/equations/equation.hpp"

namespace osc {

struct PeriodicSolutionCertificate {
  std::vector<Rational> preamble;
  std::vector<Rational> period;
  long start = 0;  // index of the first listed value

  long periodic_from() const { return start + static_cast<long>(preamble.size()); }
  Rational at(long n) const;  // n >= start
};

enum class VerificationStatus { Verified, Failed, NotVerifiable };

std::string to_string(VerificationStatus s);

struct VerificationResult {
  VerificationStatus status = VerificationStatus::NotVerifiable;
  bool degenerate = false;  // the periodic part is identically zero
  int sign = 0;             // common sign of the periodic part, 0 if mixed or zero
  long checked_from = 0;
  long checked_to = 0;  // exclusive
  long combined_period = 0;
  std::optional<long> first_failing_index;  // n of the failing residual
  std::optional<long> failing_value_index;  // the x index that residual defines
  std::optional<Rational> failing_residual;
  std::string reason;

  bool verified() const { return status == VerificationStatus::Verified; }
  /// An eventually one-signed, hence nonoscillatory, solution.
  bool proves_nonoscillation() const { return verified() && !degenerate && sign != 0; }
};

VerificationResult verify_certificate(const EquationSpec& eq, const PeriodicSolutionCertificate& cert);

/// True iff verified (degenerate certificates included).
bool verify_periodic_solution(const EquationSpec& eq, const PeriodicSolutionCertificate& cert);

/// {"preamble": [...], "period": [...], "start": n}; "period_start" may
/// replace "start" and then names the first periodic index.
PeriodicSolutionCertificate parse_certificate(const nlohmann::json& doc);
PeriodicSolutionCertificate load_certificate(const std::filesystem::path& path);
nlohmann::json to_json(const PeriodicSolutionCertificate& cert);

}  // namespace osc
