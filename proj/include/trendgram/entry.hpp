#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trendgram {

enum class Source { bibtex, csv, endnote };

std::string_view to_string(Source source) noexcept;
std::optional<Source> source_from_string(std::string_view text) noexcept;

/// One bibliographic record reduced to the fields the analysis uses.
struct Entry {
  std::string id;  // "<source tag>:<ordinal>", stable across runs
  std::string title;
  std::string abstract;
  std::vector<std::string> keywords;  // author-supplied phrases
  int year = 0;
  std::vector<std::string> authors;
  Source source = Source::bibtex;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Inclusive calendar-year window.
struct YearRange {
  int min = 2000;
  int max = 2014;

  bool contains(int year) const noexcept { return year >= min && year <= max; }
  friend bool operator==(const YearRange&, const YearRange&) = default;
};

}  // namespace trendgram
