#include "trendgram/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "strings.hpp"

namespace trendgram::plot {
namespace {

constexpr double kPlotLeft = 70;
constexpr double kPlotRight = 470;
constexpr double kPlotTop = 50;
constexpr double kPlotBottom = 350;
constexpr double kLegendX = 485;

struct Stroke {
  std::string_view dash;  // empty = solid
  double width;
};

constexpr std::array<Stroke, 8> kStrokes{{
    {"", 1.5},
    {"8,4", 1.5},
    {"2,3", 1.5},
    {"8,3,2,3", 1.5},
    {"", 3},
    {"8,4", 3},
    {"2,3", 3},
    {"8,3,2,3", 3},
}};

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string stroke_attrs(std::size_t index) {
  const Stroke& s = kStrokes[index % kStrokes.size()];
  std::string out = "stroke=\"black\" stroke-width=\"" + detail::format_g(s.width, 3) + "\"";
  if (!s.dash.empty()) out += " stroke-dasharray=\"" + std::string(s.dash) + "\"";
  return out;
}

}  // namespace

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string render(std::span<const freq::FrequencySeries> series, std::string_view title) {
  int year_min = 0, year_max = 0;
  bool any_year = false;
  double value_max = 0.0;
  bool any_data = false;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      if (!any_year) {
        year_min = year_max = p.year;
        any_year = true;
      }
      year_min = std::min(year_min, p.year);
      year_max = std::max(year_max, p.year);
      if (p.point.has_data) {
        any_data = true;
        value_max = std::max(value_max, p.point.value);
      }
    }
  }
  const double y_top = value_max > 0 ? value_max * 1.1 : 1.0;

  auto x_of = [&](int year) {
    if (year_max == year_min) return (kPlotLeft + kPlotRight) / 2;
    return kPlotLeft + (kPlotRight - kPlotLeft) * (year - year_min) / double(year_max - year_min);
  };
  auto y_of = [&](double v) { return kPlotBottom - (kPlotBottom - kPlotTop) * v / y_top; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\" font-family=\"sans-serif\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"25\" text-anchor=\"middle\" font-size=\"16\">" + xml_escape(title) +
         "</text>\n";

  // Axes.
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + fixed2(kPlotLeft) + "\" y1=\"" + fixed2(kPlotBottom) + "\" x2=\"" +
         fixed2(kPlotRight) + "\" y2=\"" + fixed2(kPlotBottom) + "\"/>\n";
  svg += "<line x1=\"" + fixed2(kPlotLeft) + "\" y1=\"" + fixed2(kPlotTop) + "\" x2=\"" +
         fixed2(kPlotLeft) + "\" y2=\"" + fixed2(kPlotBottom) + "\"/>\n";
  svg += "</g>\n";

  // Year ticks: at most 15 labels.
  svg += "<g font-size=\"10\" text-anchor=\"middle\">\n";
  if (any_year) {
    const int span = year_max - year_min;
    const int step = std::max(1, (span + 14) / 15);
    for (int y = year_min; y <= year_max; y += step) {
      const std::string x = fixed2(x_of(y));
      svg += "<line x1=\"" + x + "\" y1=\"350.00\" x2=\"" + x +
             "\" y2=\"355.00\" stroke=\"black\"/>";
      svg += "<text x=\"" + x + "\" y=\"368.00\">" + std::to_string(y) + "</text>\n";
    }
  }
  svg += "</g>\n";
  svg += "<text x=\"270\" y=\"390\" text-anchor=\"middle\" font-size=\"12\">year</text>\n";

  // Frequency ticks: five intervals.
  svg += "<g font-size=\"10\" text-anchor=\"end\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = y_top * i / 5;
    const std::string y = fixed2(y_of(v));
    svg += "<line x1=\"65.00\" y1=\"" + y + "\" x2=\"70.00\" y2=\"" + y + "\" stroke=\"black\"/>";
    svg += "<text x=\"62.00\" y=\"" + fixed2(y_of(v) + 3) + "\">" + detail::format_g(v, 3) +
           "</text>\n";
  }
  svg += "</g>\n";
  svg += "<text x=\"15\" y=\"200\" text-anchor=\"middle\" font-size=\"12\" "
         "transform=\"rotate(-90 15 200)\">frequency</text>\n";

  // Series: one polyline per contiguous run of points with data.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& points = series[i].points;
    svg += "<g fill=\"none\" " + stroke_attrs(i) + ">\n";
    std::size_t j = 0;
    while (j < points.size()) {
      if (!points[j].point.has_data) {
        ++j;
        continue;
      }
      std::size_t end = j;
      while (end < points.size() && points[end].point.has_data) ++end;
      if (end - j == 1) {
        svg += "<circle cx=\"" + fixed2(x_of(points[j].year)) + "\" cy=\"" +
               fixed2(y_of(points[j].point.value)) + "\" r=\"2\" fill=\"black\"/>\n";
      } else {
        svg += "<polyline points=\"";
        for (std::size_t k = j; k < end; ++k) {
          if (k != j) svg.push_back(' ');
          svg += fixed2(x_of(points[k].year)) + "," + fixed2(y_of(points[k].point.value));
        }
        svg += "\"/>\n";
      }
      j = end;
    }
    svg += "</g>\n";
  }

  // Legend.
  svg += "<g font-size=\"11\">\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = kPlotTop + 10 + 20.0 * static_cast<double>(i);
    svg += "<line x1=\"" + fixed2(kLegendX) + "\" y1=\"" + fixed2(y) + "\" x2=\"" +
           fixed2(kLegendX + 30) + "\" y2=\"" + fixed2(y) + "\" " + stroke_attrs(i) + "/>";
    svg += "<text x=\"" + fixed2(kLegendX + 36) + "\" y=\"" + fixed2(y + 4) + "\">" +
           xml_escape(series[i].label) + "</text>\n";
  }
  svg += "</g>\n";

  if (!any_data) {
    svg += "<text x=\"270\" y=\"200\" text-anchor=\"middle\" font-size=\"20\" "
           "fill=\"gray\">no data</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace trendgram::plot
