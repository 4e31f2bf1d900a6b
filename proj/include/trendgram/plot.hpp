#pragma once

#include <span>
#include <string>
#include <string_view>

#include "trendgram/freq.hpp"

namespace trendgram::plot {

inline constexpr int kWidth = 640;
inline constexpr int kHeight = 400;

/// Year/frequency line chart as a standalone SVG document.
///
/// Layout is fixed (640x400): title on top, plot area on the left, legend on
/// the right. The x axis spans every year present in the series; the y axis
/// runs from 0 to the largest plotted value plus 10% headroom. Series are told
/// apart by dash pattern (solid, dashed, dotted, dash-dot) so the chart stays
/// readable in monochrome. Points without data break the line. If no series
/// has any data the axes are drawn with a "no data" placard.
///
/// The output depends only on the input: no timestamps, ids or randomness.
std::string render(std::span<const freq::FrequencySeries> series, std::string_view title);

std::string xml_escape(std::string_view text);

}  // namespace trendgram::plot
