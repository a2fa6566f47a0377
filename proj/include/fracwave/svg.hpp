#pragma once

// Minimal SVG line plots. Derived artifacts only; nothing downstream parses
// them back.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "fracwave/common.hpp"

namespace fracwave {

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Write a line plot; log-scaled axes take log10 of the data first.
inline void write_svg_plot(const std::string& path, const std::string& title,
                           const std::vector<SvgSeries>& series, bool logx = false,
                           bool logy = false) {
  const int W = 720, H = 480, M = 60;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto tx = [&](double x) { return logx ? std::log10(std::max(x, 1e-300)) : x; };
  auto ty = [&](double y) { return logy ? std::log10(std::max(y, 1e-300)) : y; };
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, tx(x)); xmax = std::max(xmax, tx(x));
      ymin = std::min(ymin, ty(y)); ymax = std::max(ymax, ty(y));
    }
  if (!(xmax > xmin)) { xmax = xmin + 1; }
  if (!(ymax > ymin)) { ymax = ymin + 1; }
  auto px = [&](double x) { return M + (tx(x) - xmin) / (xmax - xmin) * (W - 2 * M); };
  auto py = [&](double y) { return H - M - (ty(y) - ymin) / (ymax - ymin) * (H - 2 * M); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("svg: cannot open " + path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-size='15'>" << title
      << "</text>\n"
      << "<line x1='" << M << "' y1='" << H - M << "' x2='" << W - M << "' y2='" << H - M
      << "' stroke='black'/>\n"
      << "<line x1='" << M << "' y1='" << M << "' x2='" << M << "' y2='" << H - M
      << "' stroke='black'/>\n";
  int ci = 0;
  for (const auto& s : series) {
    const char* color = colors[ci % 6];
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
    for (const auto& [x, y] : s.points) out << px(x) << "," << py(y) << " ";
    out << "'/>\n";
    out << "<text x='" << W - M + 4 << "' y='" << M + 16 * ci
        << "' font-size='12' fill='" << color << "' text-anchor='end'>" << s.label << "</text>\n";
    ++ci;
  }
  out << "</svg>\n";
}

}  // namespace fracwave
