#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "trendgram/textprep.hpp"

namespace trendgram::ngram {

inline constexpr int kMaxLength = 4;

/// One row of the records file: `count` occurrences of the `n`-word phrase
/// `ngram` in entries published in `year`.
struct NgramRecord {
  int n = 0;
  std::string ngram;  // tokens joined by single spaces
  int year = 0;
  std::uint64_t count = 0;

  friend bool operator==(const NgramRecord&, const NgramRecord&) = default;
  friend auto operator<=>(const NgramRecord& a, const NgramRecord& b) {
    return std::tie(a.n, a.ngram, a.year, a.count) <=> std::tie(b.n, b.ngram, b.year, b.count);
  }
};

/// Records sorted by (n, ngram, year) with unique keys.
using RecordSet = std::vector<NgramRecord>;

class Stoplist {
 public:
  /// Parses one word per line; '#' starts a comment; words are lowercased.
  /// Throws DataError if the list is empty or lacks "of".
  static Stoplist parse(std::string_view text);

  /// The bundled Snowball English list.
  static const Stoplist& english();

  bool contains(std::string_view word) const { return words_.contains(std::string(word)); }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Contents of the bundled stoplist file.
std::string_view bundled_stoplist_text() noexcept;

/// Every contiguous window of length n_min..n_max, shortest lengths first,
/// left to right within a length. Requires 1 <= n_min <= n_max.
std::vector<std::vector<std::string>> ngrams_of(std::span<const std::string> tokens, int n_min,
                                                int n_max);

/// False when at least half of the tokens are stopwords.
bool passes_stopword_rule(std::span<const std::string> ngram, const Stoplist& stoplist);

/// Accumulates (n, ngram, year) counts. Counters over disjoint shards can be
/// merged in any order.
class Counter {
 public:
  Counter(const Stoplist& stoplist, int n_min = 1, int n_max = kMaxLength);

  void add(const textprep::Sentence& sentence);
  void merge(const Counter& other);
  RecordSet records() const;

 private:
  using Key = std::tuple<int, std::string, int>;
  const Stoplist* stoplist_;
  int n_min_;
  int n_max_;
  std::map<Key, std::uint64_t> counts_;
};

RecordSet count_ngrams(std::span<const textprep::Sentence> sentences, const Stoplist& stoplist,
                       int n_min = 1, int n_max = kMaxLength);

/// Header `n,ngram,year,count`, rows in (n, ngram, year) order.
std::string write_records(const RecordSet& records);

/// Strict reader for machine-produced record files. Throws DataError naming
/// the line of the first malformed row. Quoted ngram cells are accepted.
RecordSet read_records(std::string_view text);

struct RankedNgram {
  std::string ngram;
  std::uint64_t total = 0;

  friend bool operator==(const RankedNgram&, const RankedNgram&) = default;
};

/// Totals per ngram of length n over all years, highest first, ties in
/// ascending byte order; at most k rows.
std::vector<RankedNgram> top_ngrams(const RecordSet& records, int n, std::size_t k);

}  // namespace trendgram::ngram
