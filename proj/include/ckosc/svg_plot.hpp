#pragma once

#include <string>
#include <vector>

namespace ckosc {

enum class SeriesStyle { Line, Dashed, Circles, Triangles };

struct PlotSeries {
  std::string label;
  std::string color;
  SeriesStyle style = SeriesStyle::Line;
  std::vector<double> x;
  std::vector<double> y;
  std::size_t marker_stride = 1;  // only every n-th point gets a marker
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

/// Self-contained SVG line chart: axes with ticks, one polyline or marker
/// set per series, and a legend. Output is deterministic.
std::string render_svg(const PlotSpec& spec);

}  // namespace ckosc
