#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trendgram/entry.hpp"
#include "trendgram/ngram.hpp"

namespace trendgram::freq {

using Phrase = std::vector<std::string>;

/// A frequency value plus whether its denominator existed. A point without
/// data (no n-grams of that length in that year) is not the same as zero.
struct Point {
  double value = 0.0;
  bool has_data = false;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Immutable lookup structure over a record set: per-(ngram, year) counts and
/// per-(n, year) totals, the denominator of every frequency.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  explicit FrequencyTable(ngram::RecordSet records);

  const ngram::RecordSet& records() const noexcept { return records_; }
  const std::vector<int>& years() const noexcept { return years_; }
  bool empty() const noexcept { return records_.empty(); }

  std::uint64_t count(std::string_view ngram, int year) const;
  std::uint64_t total(int n, int year) const;
  const std::map<std::pair<int, int>, std::uint64_t>& totals() const noexcept { return totals_; }

  /// Year -> count for one ngram (empty map when unknown).
  const std::map<int, std::uint64_t>& counts_by_year(std::string_view ngram) const;

 private:
  ngram::RecordSet records_;
  std::unordered_map<std::string, std::map<int, std::uint64_t>> by_ngram_;
  std::map<std::pair<int, int>, std::uint64_t> totals_;
  std::vector<int> years_;
};

FrequencyTable build_table(ngram::RecordSet records);

/// count(phrase, year) / total(|phrase|, year). Requires 1..4 tokens.
Point frequency(const FrequencyTable& table, std::span<const std::string> phrase, int year);

/// Sum of the member frequencies; has_data when any member has data.
Point frequency_list(const FrequencyTable& table, std::span<const Phrase> phrases, int year);

struct Series {
  std::string label;
  std::vector<Phrase> phrases;

  friend bool operator==(const Series&, const Series&) = default;
};

struct Query {
  std::vector<Series> series;
};

/// "a, b+c": commas separate competing series, '+' unions phrases within a
/// series. Phrases go through the same tokenizer and article removal as the
/// corpus. Throws QueryError on an empty query, series or phrase, or a phrase
/// longer than four words.
Query parse_query(std::string_view text);

/// Labels joined with ", ".
std::string to_string(const Query& query);

struct YearPoint {
  int year = 0;
  Point point;

  friend bool operator==(const YearPoint&, const YearPoint&) = default;
};

struct FrequencySeries {
  std::string label;
  std::vector<YearPoint> points;  // ascending, one per year of the range
};

/// One series per query series, one point per year in range.
std::vector<FrequencySeries> evaluate(const FrequencyTable& table, const Query& query,
                                      YearRange range);

/// Header `label,year,frequency,has_data`; frequencies with 10 significant
/// digits, has_data as 1/0.
std::string write_series_csv(std::span<const FrequencySeries> series);

/// [{"label": ..., "points": [{"year", "frequency", "has_data"}...]}...]
std::string write_series_json(std::span<const FrequencySeries> series);

}  // namespace trendgram::freq
