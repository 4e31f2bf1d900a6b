#include "trendgram/ngram.hpp"

#include <algorithm>
#include <unordered_map>

#include "strings.hpp"
#include "trendgram/csv.hpp"
#include "trendgram/error.hpp"

namespace trendgram::ngram {

Stoplist Stoplist::parse(std::string_view text) {
  Stoplist list;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (!line.empty()) list.words_.insert(detail::to_lower(line));
  }
  if (list.words_.empty()) throw DataError("stoplist is empty");
  if (!list.words_.contains("of")) throw DataError("stoplist does not contain \"of\"");
  return list;
}

const Stoplist& Stoplist::english() {
  static const Stoplist list = parse(bundled_stoplist_text());
  return list;
}

std::vector<std::vector<std::string>> ngrams_of(std::span<const std::string> tokens, int n_min,
                                                int n_max) {
  std::vector<std::vector<std::string>> out;
  for (int n = n_min; n <= n_max; ++n) {
    const auto len = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i + len <= tokens.size(); ++i)
      out.emplace_back(tokens.begin() + i, tokens.begin() + i + len);
  }
  return out;
}

bool passes_stopword_rule(std::span<const std::string> ngram, const Stoplist& stoplist) {
  std::size_t stop = 0;
  for (const auto& t : ngram) stop += stoplist.contains(t) ? 1 : 0;
  // stop / size >= 1/2 excludes; integer form avoids rounding questions.
  return 2 * stop < ngram.size();
}

Counter::Counter(const Stoplist& stoplist, int n_min, int n_max)
    : stoplist_(&stoplist), n_min_(n_min), n_max_(n_max) {}

void Counter::add(const textprep::Sentence& sentence) {
  const auto& tokens = sentence.tokens;
  std::vector<bool> is_stop(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) is_stop[i] = stoplist_->contains(tokens[i]);

  for (int n = n_min_; n <= n_max_; ++n) {
    const auto len = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
      std::size_t stop = 0;
      for (std::size_t j = i; j < i + len; ++j) stop += is_stop[j] ? 1 : 0;
      if (2 * stop >= len) continue;
      std::string text = tokens[i];
      for (std::size_t j = i + 1; j < i + len; ++j) {
        text.push_back(' ');
        text += tokens[j];
      }
      ++counts_[Key{n, std::move(text), sentence.year}];
    }
  }
}

void Counter::merge(const Counter& other) {
  for (const auto& [key, count] : other.counts_) counts_[key] += count;
}

RecordSet Counter::records() const {
  RecordSet out;
  out.reserve(counts_.size());
  for (const auto& [key, count] : counts_)
    out.push_back(NgramRecord{std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  return out;
}

RecordSet count_ngrams(std::span<const textprep::Sentence> sentences, const Stoplist& stoplist,
                       int n_min, int n_max) {
  Counter counter(stoplist, n_min, n_max);
  for (const auto& s : sentences) counter.add(s);
  return counter.records();
}

namespace {
constexpr std::string_view kRecordsHeader = "n,ngram,year,count";
}

std::string write_records(const RecordSet& records) {
  std::string out(kRecordsHeader);
  out.push_back('\n');
  for (const auto& r : records) {
    out += std::to_string(r.n);
    out.push_back(',');
    out += csv::escape_cell(r.ngram);
    out.push_back(',');
    out += std::to_string(r.year);
    out.push_back(',');
    out += std::to_string(r.count);
    out.push_back('\n');
  }
  return out;
}

RecordSet read_records(std::string_view text) {
  csv::ReadResult table = csv::read(text);
  if (table.unterminated_quote)
    throw DataError("records line " + std::to_string(table.unterminated_line) +
                    ": unterminated quoted cell");
  if (table.rows.empty() || csv::join_row(table.rows.front().cells) != kRecordsHeader)
    throw DataError("records line 1: expected header '" + std::string(kRecordsHeader) + "'");

  RecordSet out;
  out.reserve(table.rows.size() - 1);
  for (std::size_t r = 1; r < table.rows.size(); ++r) {
    const csv::Row& row = table.rows[r];
    auto fail = [&](const std::string& what) {
      return DataError("records line " + std::to_string(row.line) + ": " + what);
    };
    if (row.cells.size() != 4) throw fail("expected 4 cells, found " + std::to_string(row.cells.size()));
    NgramRecord rec;
    if (!detail::parse_year(row.cells[0], rec.n) || rec.n < 1 || rec.n > kMaxLength)
      throw fail("bad n '" + row.cells[0] + "'");
    rec.ngram = row.cells[1];
    if (detail::collapse_whitespace(rec.ngram) != rec.ngram || rec.ngram.empty())
      throw fail("ngram is not single-space separated");
    if (static_cast<int>(std::count(rec.ngram.begin(), rec.ngram.end(), ' ')) + 1 != rec.n)
      throw fail("n does not match the number of words in '" + rec.ngram + "'");
    if (!detail::parse_year(row.cells[2], rec.year)) throw fail("bad year '" + row.cells[2] + "'");
    const std::string& count = row.cells[3];
    if (count.empty() || count.size() > 19 ||
        !std::all_of(count.begin(), count.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw fail("bad count '" + count + "'");
    rec.count = std::stoull(count);
    if (rec.count == 0) throw fail("count must be positive");
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i) {
    const auto& a = out[i - 1];
    const auto& b = out[i];
    if (a.n == b.n && a.ngram == b.ngram && a.year == b.year)
      throw DataError("records: duplicate row for (" + b.ngram + ", " + std::to_string(b.year) + ")");
  }
  return out;
}

std::vector<RankedNgram> top_ngrams(const RecordSet& records, int n, std::size_t k) {
  std::unordered_map<std::string, std::uint64_t> totals;
  for (const auto& r : records)
    if (r.n == n) totals[r.ngram] += r.count;
  std::vector<RankedNgram> ranked;
  ranked.reserve(totals.size());
  for (auto& [ngram, total] : totals) ranked.push_back({ngram, total});
  std::sort(ranked.begin(), ranked.end(), [](const RankedNgram& a, const RankedNgram& b) {
    if (a.total != b.total) return a.total > b.total;
    return a.ngram < b.ngram;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

}  // namespace trendgram::ngram
