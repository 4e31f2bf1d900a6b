#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trendgram/freq.hpp"

namespace trendgram::trends {

/// Least-squares slope of frequency against year over the points that have
/// data, with years centred on their mean. Throws std::domain_error when
/// fewer than two points have data.
double slope(const freq::FrequencySeries& series);

enum class Direction { rising, falling };

struct TrendEntry {
  std::string ngram;
  int n = 0;
  double slope = 0.0;        // frequency change per year
  double mean_freq = 0.0;    // over years whose denominator has data
  std::uint64_t total_count = 0;
  int years_with_data = 0;   // years in which the ngram itself occurs

  friend bool operator==(const TrendEntry&, const TrendEntry&) = default;
};

struct RankOptions {
  int n = 2;
  Direction direction = Direction::rising;
  std::size_t k = 10;
  std::uint64_t min_support = 30;
  int min_years = 5;
  std::optional<YearRange> range;  // defaults to the table's year span
};

/// Scores every ngram of length n that meets min_support and min_years, then
/// orders by slope (descending for rising, ascending for falling), higher
/// total count, then byte order. Returns at most k entries.
std::vector<TrendEntry> rank(const freq::FrequencyTable& table, const RankOptions& options);

/// Frequency series of one ngram over range (single-phrase query).
freq::FrequencySeries ngram_series(const freq::FrequencyTable& table, const std::string& ngram,
                                   YearRange range);

/// The table's first..last year, or nullopt for an empty table.
std::optional<YearRange> year_span(const freq::FrequencyTable& table);

struct CatalogSpec {
  std::size_t limit = 800;
  std::optional<YearRange> range;
};

struct CatalogPage {
  std::string ngram;
  int n = 0;
  std::uint64_t total = 0;
  std::string file_name;  // "plot-0001.svg", ...
  std::string svg;
};

struct Catalog {
  std::vector<CatalogPage> pages;
  std::string index_html;
};

/// One plot per most frequent ngram across all lengths (total count
/// descending, ties in byte order), plus an HTML index of ngram/total/link.
/// Throws std::invalid_argument for an empty table or a zero limit.
Catalog build_catalog(const freq::FrequencyTable& table, const CatalogSpec& spec);

/// Writes index.html and every page into dir, creating it if needed.
void write_catalog(const Catalog& catalog, const std::filesystem::path& dir);

}  // namespace trendgram::trends
