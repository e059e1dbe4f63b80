#pragma once

#include <filesystem>
#include <iosfwd>

#include "osc/simulate/trace.hpp"

namespace osc {

/// CSV with header n,value_rational,value_decimal,sign.
void write_trace_csv(std::ostream& out, const Trace& trace);
void write_trace_csv(const std::filesystem::path& path, const Trace& trace);

/// Reads the CSV written above (the decimal and sign columns are ignored).
/// InputError if the file is malformed, empty or not contiguous in n.
Trace read_trace_csv(const std::filesystem::path& path, EquationKind kind);

}  // namespace osc
