#pragma once

#include <string>
#include <utility>
#include <vector>

namespace uavhet {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;  // non-finite y values are skipped
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Standalone SVG document with axes, ticks, polylines and a legend.
std::string render_line_plot(const PlotSpec& plot);

}  // namespace uavhet
