#include "osc/simulate/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "osc/equations/equation_io.hpp"
#include "osc/error.hpp"

namespace osc {

namespace {

constexpr long kMaxCombinedPeriod = 1000000;

std::vector<Rational> rational_list(const nlohmann::json& doc, const std::string& key,
                                    std::vector<std::string>& issues) {
  std::vector<Rational> out;
  if (!doc.contains(key)) return out;
  const auto& arr = doc.at(key);
  if (!arr.is_array()) {
    issues.push_back("$." + key + ": expected an array");
    return out;
  }
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string path = "$." + key + "[" + std::to_string(k) + "]";
    if (!arr[k].is_string()) {
      issues.push_back(path + ": rationals must be strings");
      continue;
    }
    try {
      out.push_back(Rational::parse(arr[k].get<std::string>()));
    } catch (const std::exception& e) {
      issues.push_back(path + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

Rational PeriodicSolutionCertificate::at(long n) const {
  if (n < start) throw std::out_of_range("certificate starts at " + std::to_string(start));
  const long k = n - start;
  if (k < static_cast<long>(preamble.size())) return preamble[static_cast<std::size_t>(k)];
  const long len = static_cast<long>(period.size());
  return period[static_cast<std::size_t>((n - periodic_from()) % len)];
}

std::string to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::Verified: return "VERIFIED";
    case VerificationStatus::Failed: return "FAILED";
    case VerificationStatus::NotVerifiable: return "NOT_VERIFIABLE";
  }
  return "?";
}

VerificationResult verify_certificate(const EquationSpec& eq, const PeriodicSolutionCertificate& cert) {
  VerificationResult out;
  if (cert.period.empty()) {
    out.reason = "empty period";
    return out;
  }
  out.degenerate = std::all_of(cert.period.begin(), cert.period.end(), [](const Rational& q) { return q.is_zero(); });
  const int first_sign = cert.period.front().sign();
  out.sign = std::all_of(cert.period.begin(), cert.period.end(),
                         [&](const Rational& q) { return q.sign() == first_sign; })
                 ? first_sign
                 : 0;

  if (!eq.retarded() && !eq.offset_only()) {
    out.reason = "advanced equations with constant arguments cannot be periodic for all n";
    return out;
  }
  const long len = static_cast<long>(cert.period.size());
  const long p = eq.period();
  const long combined = std::lcm(p, len);
  if (combined > kMaxCombinedPeriod || combined <= 0) {
    out.reason = "combined period " + std::to_string(combined) + " is too large";
    return out;
  }
  out.combined_period = combined;
  const long d = std::max(1L, eq.max_offset());
  const long settled = std::max({0L, eq.stable_start(), cert.periodic_from() + d});
  out.checked_from = eq.retarded() ? 0 : std::max(0L, cert.start + 1);
  out.checked_to = std::max(out.checked_from, settled) + combined;

  for (long n = out.checked_from; n < out.checked_to; ++n) {
    const long other = eq.retarded() ? n + 1 : n - 1;
    if (other < cert.start) {
      out.reason = "x(" + std::to_string(other) + ") is referenced but not covered";
      return out;
    }
    Rational r = cert.at(other) - cert.at(n);
    for (std::size_t i = 0; i < eq.size(); ++i) {
      const Rational& coeff = eq.coeff(i, n);
      if (coeff.is_zero()) continue;
      const long arg = eq.arg(i, n);
      if (arg < cert.start) {
        out.reason = "x(" + std::to_string(arg) + ") is referenced but not covered";
        return out;
      }
      r += coeff * cert.at(arg);
    }
    if (!r.is_zero()) {
      out.status = VerificationStatus::Failed;
      out.first_failing_index = n;
      out.failing_value_index = other;
      out.failing_residual = r;
      out.reason = "nonzero residual at n = " + std::to_string(n);
      return out;
    }
  }
  out.status = VerificationStatus::Verified;
  return out;
}

bool verify_periodic_solution(const EquationSpec& eq, const PeriodicSolutionCertificate& cert) {
  return verify_certificate(eq, cert).verified();
}

PeriodicSolutionCertificate parse_certificate(const nlohmann::json& doc) {
  std::vector<std::string> issues;
  if (!doc.is_object()) throw InputError("certificate must be a JSON object");
  static const std::set<std::string> known{"preamble", "period", "start", "period_start", "name"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) issues.push_back("$." + key + ": unknown field");
  }
  PeriodicSolutionCertificate cert;
  cert.preamble = rational_list(doc, "preamble", issues);
  if (!doc.contains("period")) issues.push_back("$.period: missing required field");
  cert.period = rational_list(doc, "period", issues);
  if (doc.contains("period") && doc.at("period").is_array() && doc.at("period").empty()) {
    issues.push_back("$.period: must not be empty");
  }
  const bool has_start = doc.contains("start");
  const bool has_pstart = doc.contains("period_start");
  if (has_start && has_pstart) issues.push_back("$: give either start or period_start, not both");
  for (const char* key : {"start", "period_start"}) {
    if (doc.contains(key) && !doc.at(key).is_number_integer()) {
      issues.push_back(std::string("$.") + key + ": expected an integer");
    }
  }
  if (!issues.empty()) throw InputError("invalid certificate: " + issues.front(), issues);
  if (has_start) cert.start = doc.at("start").get<long>();
  if (has_pstart) cert.start = doc.at("period_start").get<long>() - static_cast<long>(cert.preamble.size());
  return cert;
}

PeriodicSolutionCertificate load_certificate(const std::filesystem::path& path) {
  return parse_certificate(read_json_file(path));
}

nlohmann::json to_json(const PeriodicSolutionCertificate& cert) {
  nlohmann::json doc;
  doc["preamble"] = nlohmann::json::array();
  for (const auto& q : cert.preamble) doc["preamble"].push_back(q.str());
  doc["period"] = nlohmann::json::array();
  for (const auto& q : cert.period) doc["period"].push_back(q.str());
  doc["start"] = cert.start;
  return doc;
}

}  // namespace osc
