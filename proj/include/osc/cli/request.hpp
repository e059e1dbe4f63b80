#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osc/criteria/tests.hpp"
#include "osc/equations/equation_io.hpp"
#include "osc/simulate/trace.hpp"

namespace osc::cli {

struct SweepDescriptor {
  std::string param;
  Rational from;
  Rational to;
  Rational step;
};

struct AnalysisRequest {
  std::string command;
  std::filesystem::path equation_file;
  ParamBindings bindings;  // --set name=value
  CriteriaOptions criteria;
  std::vector<std::string> criteria_ids;  // empty: all applicable
  std::optional<std::string> expect;      // "oscillatory" or "inconclusive"
  std::optional<std::filesystem::path> out_dir;
  std::string format = "text";
  bool plot = false;

  std::optional<SweepDescriptor> sweep;

  std::optional<std::filesystem::path> init_file;
  std::optional<unsigned long> seed;
  int count = 1;
  std::optional<long> upto;
  std::optional<long> downto;
  std::vector<std::pair<long, long>> windows;
  std::optional<long> settle;

  std::optional<std::filesystem::path> certificate;
  std::optional<std::filesystem::path> trace;
};

/// "name=value" with a rational value.
/// "a/b", "n" or an exact decimal such as "0.1748".
Rational parse_value(const std::string& text);
std::pair<std::string, Rational> parse_binding(const std::string& text);
/// "a:b" with a <= b.
std::pair<long, long> parse_window(const std::string& text);

/// Exact grid from, from+step, ..., <= to. Empty when from > to.
std::vector<Rational> sweep_grid(const SweepDescriptor& sweep);

/// {"values": {"-1": "-12/7", "0": "1"}} or {"start": -1, "values": ["-12/7", "1"]}.
InitialData load_initial_data(const std::filesystem::path& path);

/// Indices a solver needs: [-w, 0] for retarded, [N, N + mu] for advanced.
std::vector<long> initial_indices(const EquationSpec& eq);

/// Reproducible rationals k/100 with |k| <= 100, k != 0, from a 64-bit Mersenne twister.
InitialData random_initial_data(const EquationSpec& eq, unsigned long seed);

}  // namespace osc::cli
