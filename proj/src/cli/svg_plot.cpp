#include "osc/cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "osc/error.hpp"

namespace osc::cli {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 400;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg_plot(std::ostream& out, const std::string& title, const std::vector<PlotSeries>& series, long from,
                    long to) {
  double lo = 0;
  double hi = 0;
  for (const auto& s : series) {
    for (long n = from; n <= to; ++n) {
      if (!s.trace->contains(n)) continue;
      const double v = s.trace->at(n).to_double();
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi - lo < 1e-12) {
    hi += 1;
    lo -= 1;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double span_n = std::max(1L, to - from);
  auto px = [&](long n) { return kLeft + (kWidth - kLeft - kRight) * static_cast<double>(n - from) / span_n; };
  auto py = [&](double v) { return kTop + (kHeight - kTop - kBottom) * (hi - v) / (hi - lo); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"15\">" << escape(title) << "</text>\n";
  // Axes box and zero line.
  out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(kWidth - kLeft - kRight)
      << "\" height=\"" << num(kHeight - kTop - kBottom) << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(kWidth - kRight)
      << "\" y2=\"" << num(py(0)) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const long n = from + static_cast<long>(std::lround(k * (to - from) / 5.0));
    out << "<text x=\"" << num(px(n)) << "\" y=\"" << num(kHeight - kBottom + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << n << "</text>\n";
    const double v = lo + k * (hi - lo) / 5.0;
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(v) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick_label(v) << "</text>\n";
  }
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">n</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kColors[k % (sizeof kColors / sizeof *kColors)];
    std::string points;
    for (long n = from; n <= to; ++n) {
      if (!series[k].trace->contains(n)) continue;
      if (!points.empty()) points += ' ';
      points += num(px(n)) + "," + num(py(series[k].trace->at(n).to_double()));
    }
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << points
        << "\"/>\n";
    out << "<text x=\"" << num(kWidth - kRight - 8) << "\" y=\"" << num(kTop + 16 + 14 * static_cast<double>(k))
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
        << escape(series[k].label) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::vector<PlotSeries>& series, long from, long to) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_svg_plot(out, title, series, from, to);
}

}  // namespace osc::cli
