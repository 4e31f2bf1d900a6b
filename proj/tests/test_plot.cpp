#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "support.hpp"
#include "trendgram/plot.hpp"

using namespace trendgram;
using freq::FrequencySeries;

namespace {

// Two competing series over 2000..2006 with a gap in the second one.
std::vector<FrequencySeries> two_series() {
  return {
      {"feature location", {{2000, {0.001, true}}, {2001, {0.002, true}}, {2002, {0.004, true}},
                            {2003, {0.003, true}}, {2004, {0.008, true}}, {2005, {0.012, true}},
                            {2006, {0.015, true}}}},
      {"visualization", {{2000, {0.006, true}}, {2001, {0.005, true}}, {2002, {0.0, false}},
                         {2003, {0.006, true}}, {2004, {0.005, true}}, {2005, {0.007, true}},
                         {2006, {0.0, false}}}},
  };
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("two-series golden file") {
  const std::string svg = plot::render(two_series(), "Feature location vs. visualization");
  const std::string golden_path = std::string(TRENDGRAM_FIXTURE_DIR) + "/golden/two_series.svg";
  if (std::getenv("TRENDGRAM_UPDATE_GOLDEN")) {
    std::ofstream(golden_path, std::ios::binary) << svg;
  }
  CHECK(svg == testing::read_text(golden_path));
}

TEST_CASE("constant series is a horizontal line") {
  std::vector<FrequencySeries> s{{"flat", {{2000, {0.2, true}}, {2001, {0.2, true}}, {2002, {0.2, true}}}}};
  const std::string svg = plot::render(s, "flat");
  // y = 350 - 300 * 0.2 / 0.22
  CHECK(svg.find("<polyline points=\"70.00,77.27 270.00,77.27 470.00,77.27\"/>") != std::string::npos);
}

TEST_CASE("no data anywhere") {
  std::vector<FrequencySeries> s{{"x", {{2000, {0.0, false}}, {2001, {0.0, false}}}}};
  const std::string svg = plot::render(s, "empty");
  CHECK(svg.find(">no data</text>") != std::string::npos);
  CHECK(svg.find("<polyline") == std::string::npos);
  CHECK(plot::render(two_series(), "t").find("no data") == std::string::npos);
}

TEST_CASE("gaps break the line, isolated points become markers") {
  const std::string svg = plot::render(two_series(), "t");
  CHECK(occurrences(svg, "<polyline") == 3);
  CHECK(occurrences(svg, "<circle") == 0);
  std::vector<FrequencySeries> lone{{"x", {{2000, {0.1, true}}, {2001, {0.0, false}}, {2002, {0.3, true}}}}};
  CHECK(occurrences(plot::render(lone, "t"), "<circle") == 2);
}

TEST_CASE("series differ by dash pattern") {
  const std::string svg = plot::render(two_series(), "t");
  CHECK(svg.find("stroke-dasharray=\"8,4\"") != std::string::npos);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\"") != std::string::npos);
}

TEST_CASE("labels are escaped and output is deterministic") {
  std::vector<FrequencySeries> s{{"a<b & \"c\"", {{2000, {0.5, true}}}}};
  const std::string svg = plot::render(s, "x & y");
  CHECK(svg.find("a&lt;b &amp; &quot;c&quot;") != std::string::npos);
  CHECK(svg.find(">x &amp; y<") != std::string::npos);
  CHECK(svg == plot::render(s, "x & y"));
}
