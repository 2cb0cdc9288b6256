#include "ckosc/svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace ckosc {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string fixed(double v, int digits = 2) {
  char buf[48];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, ptr);
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

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

std::string marker(const PlotSeries& s, double x, double y) {
  if (s.style == SeriesStyle::Circles) {
    return "<circle cx=\"" + fixed(x) + "\" cy=\"" + fixed(y) + "\" r=\"3\" fill=\"none\" stroke=\"" +
           s.color + "\"/>\n";
  }
  return "<polygon points=\"" + fixed(x) + "," + fixed(y - 3.5) + " " + fixed(x - 3.5) + "," +
         fixed(y + 3) + " " + fixed(x + 3.5) + "," + fixed(y + 3) + "\" fill=\"none\" stroke=\"" +
         s.color + "\"/>\n";
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  Range xr, yr;
  for (const auto& s : spec.series) {
    for (double v : s.x) xr.include(v);
    for (double v : s.y) yr.include(v);
  }
  xr.finish();
  yr.finish();
  const double pad = 0.05 * (yr.hi - yr.lo);
  yr.lo -= pad;
  yr.hi += pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) + "\" height=\"" +
       fixed(kHeight, 0) + "\" viewBox=\"0 0 " + fixed(kWidth, 0) + " " + fixed(kHeight, 0) +
       "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
       escape(spec.title) + "</text>\n";
  o += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(pw) +
       "\" height=\"" + fixed(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = nice_step(xr.hi - xr.lo);
  for (double v = std::ceil(xr.lo / xs) * xs; v <= xr.hi + 1e-9 * xs; v += xs) {
    const double x = px(v);
    o += "<line x1=\"" + fixed(x) + "\" y1=\"" + fixed(kTop + ph) + "\" x2=\"" + fixed(x) +
         "\" y2=\"" + fixed(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + fixed(x) + "\" y=\"" + fixed(kTop + ph + 18) +
         "\" text-anchor=\"middle\">" + fixed(std::abs(v) < 1e-12 ? 0.0 : v, xs < 1 ? 2 : 0) +
         "</text>\n";
  }
  const double ys = nice_step(yr.hi - yr.lo);
  for (double v = std::ceil(yr.lo / ys) * ys; v <= yr.hi + 1e-9 * ys; v += ys) {
    const double y = py(v);
    o += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(kLeft) +
         "\" y2=\"" + fixed(y) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(y + 4) + "\" text-anchor=\"end\">" +
         fixed(std::abs(v) < 1e-12 ? 0.0 : v, ys < 1 ? 2 : 0) + "</text>\n";
  }
  o += "<text x=\"" + fixed(kLeft + pw / 2) + "\" y=\"" + fixed(kHeight - 10) +
       "\" text-anchor=\"middle\">" + escape(spec.x_label) + "</text>\n";
  o += "<text x=\"16\" y=\"" + fixed(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
       fixed(kTop + ph / 2) + ")\">" + escape(spec.y_label) + "</text>\n";

  for (const auto& s : spec.series) {
    const std::size_t n = std::min(s.x.size(), s.y.size());
    if (s.style == SeriesStyle::Line || s.style == SeriesStyle::Dashed) {
      o += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"";
      if (s.style == SeriesStyle::Dashed) o += " stroke-dasharray=\"6 4\"";
      o += " points=\"";
      for (std::size_t i = 0; i < n; ++i) {
        if (i) o += ' ';
        o += fixed(px(s.x[i])) + "," + fixed(py(s.y[i]));
      }
      o += "\"/>\n";
    } else {
      const std::size_t stride = std::max<std::size_t>(1, s.marker_stride);
      for (std::size_t i = 0; i < n; i += stride) {
        const double x = px(s.x[i]);
        const double y = py(s.y[i]);
        o += marker(s, x, y);
      }
    }
  }

  double ly = kTop + 14;
  for (const auto& s : spec.series) {
    const double lx = kLeft + pw - 200;
    if (s.style == SeriesStyle::Line || s.style == SeriesStyle::Dashed) {
      o += "<line x1=\"" + fixed(lx) + "\" y1=\"" + fixed(ly - 4) + "\" x2=\"" + fixed(lx + 24) +
           "\" y2=\"" + fixed(ly - 4) + "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"" +
           (s.style == SeriesStyle::Dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
    } else {
      o += marker(s, lx + 12, ly - 4);
    }
    o += "<text x=\"" + fixed(lx + 30) + "\" y=\"" + fixed(ly) + "\">" + escape(s.label) + "</text>\n";
    ly += 16;
  }
  o += "</svg>\n";
  return o;
}

}  // namespace ckosc
