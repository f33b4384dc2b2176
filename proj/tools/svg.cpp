#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pps::svg {

namespace {

constexpr int kLeft = 64, kRight = 16, kTop = 34, kBottom = 48;
constexpr std::size_t kMaxPolylinePoints = 4000;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) {
      const double pad = std::max(std::abs(lo) * 0.05, 0.5);
      lo -= pad;
      hi += pad;
    }
  }
};

double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

void draw_panel(std::ostringstream& out, const Panel& panel, int ox, int width, int height) {
  Range rx, ry;
  for (const auto& s : panel.series) {
    for (double v : s.xs) rx.add(v);
    for (double v : s.ys) ry.add(v);
  }
  rx.finish();
  ry.finish();
  const double pw = width - kLeft - kRight, ph = height - kTop - kBottom;
  auto sx = [&](double v) { return ox + kLeft + (v - rx.lo) / (rx.hi - rx.lo) * pw; };
  auto sy = [&](double v) { return kTop + ph - (v - ry.lo) / (ry.hi - ry.lo) * ph; };

  out << "<rect x=\"" << ox + kLeft << "\" y=\"" << kTop << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"#333\"/>\n";
  out << "<text x=\"" << num(ox + kLeft + pw / 2) << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-size=\"14\">" << escape(panel.title) << "</text>\n";
  out << "<text x=\"" << num(ox + kLeft + pw / 2) << "\" y=\"" << height - 8
      << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(panel.x_label) << "</text>\n";
  out << "<text transform=\"translate(" << ox + 14 << ',' << num(kTop + ph / 2)
      << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"12\">" << escape(panel.y_label)
      << "</text>\n";

  auto ticks = [](const Range& r) {
    std::vector<double> t;
    const double step = nice_step(r.hi - r.lo);
    for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 1e-9 * step; v += step) t.push_back(v);
    return t;
  };
  for (double v : ticks(rx)) {
    out << "<line x1=\"" << num(sx(v)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(sx(v))
        << "\" y2=\"" << num(kTop + ph + 5) << "\" stroke=\"#333\"/>"
        << "<text x=\"" << num(sx(v)) << "\" y=\"" << num(kTop + ph + 18)
        << "\" text-anchor=\"middle\" font-size=\"10\">" << tick_label(v) << "</text>\n";
  }
  for (double v : ticks(ry)) {
    out << "<line x1=\"" << ox + kLeft - 5 << "\" y1=\"" << num(sy(v)) << "\" x2=\"" << ox + kLeft
        << "\" y2=\"" << num(sy(v)) << "\" stroke=\"#333\"/>"
        << "<text x=\"" << ox + kLeft - 8 << "\" y=\"" << num(sy(v) + 3)
        << "\" text-anchor=\"end\" font-size=\"10\">" << tick_label(v) << "</text>\n";
  }

  int legend_row = 0;
  for (const auto& s : panel.series) {
    const std::size_t n = std::min(s.xs.size(), s.ys.size());
    if (s.markers) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
        out << "<circle cx=\"" << num(sx(s.xs[i])) << "\" cy=\"" << num(sy(s.ys[i]))
            << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
      }
    } else if (n > 0) {
      const std::size_t stride = std::max<std::size_t>(1, n / kMaxPolylinePoints);
      out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < n; i += stride) {
        if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
        out << num(sx(s.xs[i])) << ',' << num(sy(s.ys[i])) << ' ';
      }
      if ((n - 1) % stride != 0) out << num(sx(s.xs[n - 1])) << ',' << num(sy(s.ys[n - 1]));
      out << "\"/>\n";
    }
    if (!s.label.empty()) {
      const double ly = kTop + 14 + 16 * legend_row++;
      const double lx = ox + kLeft + pw - 110;
      out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 18)
          << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>"
          << "<text x=\"" << num(lx + 24) << "\" y=\"" << num(ly) << "\" font-size=\"11\">"
          << escape(s.label) << "</text>\n";
    }
  }
}

}  // namespace

std::string render(const std::vector<Panel>& panels, int panel_width, int panel_height) {
  std::ostringstream out;
  const int width = panel_width * static_cast<int>(std::max<std::size_t>(1, panels.size()));
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << panel_height << "\" viewBox=\"0 0 " << width << ' ' << panel_height
      << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t n = 0; n < panels.size(); ++n)
    draw_panel(out, panels[n], static_cast<int>(n) * panel_width, panel_width, panel_height);
  out << "</svg>\n";
  return out.str();
}

}  // namespace pps::svg
