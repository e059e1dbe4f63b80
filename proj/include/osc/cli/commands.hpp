#pragma once

#include <iosfwd>

#include "osc/cli/request.hpp"

namespace osc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // --expect mismatch or failed verification
inline constexpr int kExitInvalidInput = 2;

int cmd_analyze(const AnalysisRequest& req, std::ostream& out);
int cmd_sweep(const AnalysisRequest& req, std::ostream& out);
int cmd_simulate(const AnalysisRequest& req, std::ostream& out);
int cmd_verify(const AnalysisRequest& req, std::ostream& out);

/// Parses the command line and dispatches. Input errors are reported on
/// `err` and mapped to kExitInvalidInput.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osc::cli
