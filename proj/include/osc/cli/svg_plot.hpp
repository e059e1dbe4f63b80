#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "osc/simulate/trace.hpp"

namespace osc::cli {

struct PlotSeries {
  std::string label;
  const Trace* trace = nullptr;
};

/// Static line plot of value against n over [from, to]. Decimal coordinates
/// are display-only conversions of the exact values.
void write_svg_plot(std::ostream& out, const std::string& title, const std::vector<PlotSeries>& series, long from,
                    long to);
void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::vector<PlotSeries>& series, long from, long to);

}  // namespace osc::cli
