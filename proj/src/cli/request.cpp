#include "osc/cli/request.hpp"

#include <random>

#include "osc/equations/hypotheses.hpp"
#include "osc/error.hpp"

namespace osc::cli {

Rational parse_value(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational::parse(text);
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
      (whole != "-" && !whole.empty() && whole.find_first_not_of("0123456789", whole[0] == '-') != std::string::npos)) {
    throw std::invalid_argument("invalid rational '" + text + "'");
  }
  const bool negative = !whole.empty() && whole[0] == '-';
  const std::string digits = whole.substr(negative ? 1 : 0) + frac;
  Rational value(BigInt(digits, 10), BigInt(std::string("1") + std::string(frac.size(), '0'), 10));
  return negative ? -value : value;
}

std::pair<std::string, Rational> parse_binding(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw InputError("expected name=value, got '" + text + "'");
  try {
    return {text.substr(0, eq), parse_value(text.substr(eq + 1))};
  } catch (const std::exception& e) {
    throw InputError("bad value in '" + text + "': " + e.what());
  }
}

std::pair<long, long> parse_window(const std::string& text) {
  const auto colon = text.find(':', 1);
  try {
    if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a_text = text.substr(0, colon);
    const std::string b_text = text.substr(colon + 1);
    const long a = std::stol(a_text, &used_a);
    const long b = std::stol(b_text, &used_b);
    if (used_a != a_text.size() || used_b != b_text.size()) throw std::invalid_argument("trailing characters");
    if (a > b) throw std::invalid_argument("empty window");
    return {a, b};
  } catch (const std::exception& e) {
    throw InputError("bad window '" + text + "' (expected a:b): " + e.what());
  }
}

std::vector<Rational> sweep_grid(const SweepDescriptor& sweep) {
  if (sweep.step.sign() <= 0) throw InputError("sweep step must be positive");
  std::vector<Rational> out;
  for (Rational v = sweep.from; v <= sweep.to; v += sweep.step) out.push_back(v);
  return out;
}

InitialData load_initial_data(const std::filesystem::path& path) {
  const nlohmann::json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("values")) throw InputError(path.string() + ": expected {\"values\": ...}");
  InitialData out;
  auto value_of = [&](const nlohmann::json& v, const std::string& where) {
    if (!v.is_string()) throw InputError(path.string() + ": " + where + ": rationals must be strings");
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(path.string() + ": " + where + ": " + e.what());
    }
  };
  const auto& values = doc.at("values");
  if (values.is_object()) {
    if (doc.contains("start")) throw InputError(path.string() + ": start is only used with a value list");
    for (const auto& [key, v] : values.items()) {
      long n = 0;
      try {
        std::size_t used = 0;
        n = std::stol(key, &used);
        if (used != key.size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw InputError(path.string() + ": $.values." + key + ": index must be an integer");
      }
      out[n] = value_of(v, "$.values." + key);
    }
  } else if (values.is_array()) {
    if (!doc.contains("start") || !doc.at("start").is_number_integer()) {
      throw InputError(path.string() + ": a value list needs an integer start");
    }
    long n = doc.at("start").get<long>();
    for (std::size_t k = 0; k < values.size(); ++k, ++n) {
      out[n] = value_of(values[k], "$.values[" + std::to_string(k) + "]");
    }
  } else {
    throw InputError(path.string() + ": $.values must be an object or an array");
  }
  if (out.empty()) throw InputError(path.string() + ": no initial values");
  return out;
}

std::vector<long> initial_indices(const EquationSpec& eq) {
  std::vector<long> out;
  if (eq.retarded()) {
    const long w = check_hypotheses(eq).initial_depth;
    for (long n = -w; n <= 0; ++n) out.push_back(n);
  } else {
    const long mu = std::max(1L, check_hypotheses(eq).max_deviation_bound.value_or(eq.max_offset()));
    for (long n = eq.horizon(); n <= eq.horizon() + mu; ++n) out.push_back(n);
  }
  return out;
}

InitialData random_initial_data(const EquationSpec& eq, unsigned long seed) {
  std::mt19937_64 rng(seed);
  InitialData out;
  for (long n : initial_indices(eq)) {
    long k = 0;
    while (k == 0) k = static_cast<long>(rng() % 201) - 100;
    out[n] = Rational(k, 100);
  }
  return out;
}

}  // namespace osc::cli
