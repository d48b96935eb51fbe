#pragma once

#include <algorithm>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>

#include "csv.hpp"
#include "dataset.hpp"
#include "format.hpp"

namespace wavparity {

struct ScatterStyle {
  int width = 900;
  int height = 500;
  int margin_left = 70;
  int margin_right = 130;
  int margin_top = 40;
  int margin_bottom = 60;
  double point_radius = 2.0;
  double threshold = 0.5;
};

namespace detail {

inline std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

/// Self-contained scatter of oddness score against n. Each point is a
/// <circle class="point odd|even">; the decision threshold is the single
/// element with id="threshold-line". The legend uses rects, not circles.
inline std::string scatter_svg(std::span<const ScoreRow> rows, const ScatterStyle& style = {}) {
  const double plot_w = style.width - style.margin_left - style.margin_right;
  const double plot_h = style.height - style.margin_top - style.margin_bottom;

  std::uint64_t lo = 0;
  std::uint64_t hi = 1;
  if (!rows.empty()) {
    const auto [mn, mx] = std::minmax_element(
        rows.begin(), rows.end(), [](const ScoreRow& a, const ScoreRow& b) { return a.n < b.n; });
    lo = mn->n;
    hi = std::max(mx->n, lo + 1);
  }
  const double span = static_cast<double>(hi - lo);
  auto x_of = [&](std::uint64_t n) {
    return style.margin_left + plot_w * static_cast<double>(n - lo) / span;
  };
  auto y_of = [&](double s) {
    return style.margin_top + plot_h * (1.0 - std::clamp(s, 0.0, 1.0));
  };
  using detail::fmt_coord;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
     << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n"
     << "<title>Oddness score by integer</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
     << "\" fill=\"white\"/>\n";

  // Axes with ticks.
  const double x0 = style.margin_left;
  const double x1 = style.margin_left + plot_w;
  const double y0 = style.margin_top + plot_h;
  const double y1 = style.margin_top;
  os << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << fmt_coord(x0) << "\" y1=\"" << fmt_coord(y0) << "\" x2=\"" << fmt_coord(x1)
     << "\" y2=\"" << fmt_coord(y0) << "\"/>\n"
     << "<line x1=\"" << fmt_coord(x0) << "\" y1=\"" << fmt_coord(y0) << "\" x2=\"" << fmt_coord(x0)
     << "\" y2=\"" << fmt_coord(y1) << "\"/>\n"
     << "</g>\n";
  os << "<g id=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double s = t / 4.0;
    os << "<text x=\"" << fmt_coord(x0 - 8) << "\" y=\"" << fmt_coord(y_of(s) + 4)
       << "\" text-anchor=\"end\">" << fmt_coord(s).substr(0, 4) << "</text>\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const auto n = lo + static_cast<std::uint64_t>(span * t / 4.0 + 0.5);
    os << "<text x=\"" << fmt_coord(x_of(n)) << "\" y=\"" << fmt_coord(y0 + 18)
       << "\" text-anchor=\"middle\">" << n << "</text>\n";
  }
  os << "</g>\n";
  os << "<text id=\"x-label\" x=\"" << fmt_coord((x0 + x1) / 2) << "\" y=\""
     << style.height - 15 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"13\">Integer n</text>\n"
     << "<text id=\"y-label\" x=\"18\" y=\"" << fmt_coord((y0 + y1) / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
     << "transform=\"rotate(-90 18 " << fmt_coord((y0 + y1) / 2) << ")\">Oddness score S_n</text>\n";

  os << "<g id=\"points\">\n";
  for (const auto& row : rows) {
    const bool odd = row.label == Parity::odd;
    os << "<circle class=\"point " << (odd ? "odd" : "even") << "\" cx=\"" << fmt_coord(x_of(row.n))
       << "\" cy=\"" << fmt_coord(y_of(row.score)) << "\" r=\"" << fmt_coord(style.point_radius)
       << "\" fill=\"" << (odd ? "red" : "blue") << "\" fill-opacity=\"0.6\"/>\n";
  }
  os << "</g>\n";

  os << "<line id=\"threshold-line\" x1=\"" << fmt_coord(x0) << "\" y1=\""
     << fmt_coord(y_of(style.threshold)) << "\" x2=\"" << fmt_coord(x1) << "\" y2=\""
     << fmt_coord(y_of(style.threshold))
     << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";

  const double lx = x1 + 15;
  os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect x=\"" << fmt_coord(lx) << "\" y=\"" << fmt_coord(y1 + 4) << "\" width=\"10\" "
     << "height=\"10\" fill=\"red\"/>\n"
     << "<text x=\"" << fmt_coord(lx + 16) << "\" y=\"" << fmt_coord(y1 + 13) << "\">odd</text>\n"
     << "<rect x=\"" << fmt_coord(lx) << "\" y=\"" << fmt_coord(y1 + 24) << "\" width=\"10\" "
     << "height=\"10\" fill=\"blue\"/>\n"
     << "<text x=\"" << fmt_coord(lx + 16) << "\" y=\"" << fmt_coord(y1 + 33) << "\">even</text>\n"
     << "<text x=\"" << fmt_coord(lx) << "\" y=\"" << fmt_coord(y1 + 53) << "\">- - S = "
     << format_double(style.threshold) << "</text>\n"
     << "</g>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace wavparity
