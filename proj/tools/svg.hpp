#pragma once

#include <string>
#include <vector>

namespace pps::svg {

struct Series {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
  std::string color = "#1f77b4";
  bool markers = false;  // draw points instead of a polyline
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

// Panels laid out left to right, each with axes, ticks and a legend.
std::string render(const std::vector<Panel>& panels, int panel_width = 520, int panel_height = 380);

}  // namespace pps::svg
