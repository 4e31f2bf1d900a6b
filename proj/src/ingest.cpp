#include <unordered_map>

#include "strings.hpp"
#include "trendgram/csv.hpp"
#include "trendgram/ingest.hpp"

namespace trendgram {

std::string_view to_string(Source source) noexcept {
  switch (source) {
    case Source::bibtex:
      return "bibtex";
    case Source::csv:
      return "csv";
    case Source::endnote:
      return "endnote";
  }
  return "bibtex";
}

std::optional<Source> source_from_string(std::string_view text) noexcept {
  if (text == "bibtex") return Source::bibtex;
  if (text == "csv") return Source::csv;
  if (text == "endnote") return Source::endnote;
  return std::nullopt;
}

namespace ingest {

FilterResult filter_incomplete(std::vector<Entry> entries) {
  FilterResult result;
  result.entries.reserve(entries.size());
  for (auto& e : entries) {
    if (e.authors.empty() || e.abstract.empty()) {
      ++result.removed;
      continue;
    }
    result.entries.push_back(std::move(e));
  }
  return result;
}

FilterResult filter_years(std::vector<Entry> entries, YearRange range) {
  FilterResult result;
  result.entries.reserve(entries.size());
  for (auto& e : entries) {
    if (!range.contains(e.year)) {
      ++result.removed;
      continue;
    }
    result.entries.push_back(std::move(e));
  }
  return result;
}

std::string normalize_title(std::string_view title) {
  // Non-ASCII bytes are kept verbatim so accented titles still compare.
  std::string kept;
  kept.reserve(title.size());
  for (char c : title) {
    auto u = static_cast<unsigned char>(c);
    if (detail::is_ascii_alnum(c) || u >= 0x80)
      kept.push_back(detail::ascii_lower(c));
    else if (detail::is_space(c))
      kept.push_back(' ');
  }
  return detail::collapse_whitespace(kept);
}

int completeness(const Entry& entry) noexcept {
  return int(!entry.abstract.empty()) + int(!entry.keywords.empty()) +
         int(!entry.authors.empty());
}

MergeResult merge_dedup(const std::vector<std::vector<Entry>>& entry_lists) {
  MergeResult result;
  std::vector<Entry> all;
  for (const auto& list : entry_lists) {
    result.report.total_in += list.size();
    all.insert(all.end(), list.begin(), list.end());
  }
  FilterResult complete = filter_incomplete(std::move(all));
  result.report.incomplete_removed = complete.removed;

  // Key -> index of the current survivor in result.entries.
  std::unordered_map<std::string, std::size_t> seen;
  for (auto& e : complete.entries) {
    std::string key = normalize_title(e.title) + '\x1f' + std::to_string(e.year);
    auto [it, inserted] = seen.try_emplace(std::move(key), result.entries.size());
    if (inserted) {
      result.entries.push_back(std::move(e));
      continue;
    }
    ++result.report.duplicates_removed;
    Entry& survivor = result.entries[it->second];
    if (completeness(e) > completeness(survivor)) survivor = std::move(e);
  }
  result.report.total_out = result.entries.size();
  return result;
}

namespace {
constexpr std::string_view kCorpusHeader = "id,source,year,title,abstract,keywords,authors";
}

std::string write_corpus(const std::vector<Entry>& entries) {
  std::string out(kCorpusHeader);
  out.push_back('\n');
  for (const auto& e : entries) {
    out += csv::escape_cell(e.id);
    out.push_back(',');
    out += to_string(e.source);
    out.push_back(',');
    out += std::to_string(e.year);
    for (const std::string& cell :
         {e.title, e.abstract, detail::join(e.keywords, ";"), detail::join(e.authors, ";")}) {
      out.push_back(',');
      out += csv::quote_cell(cell);
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<Entry> read_corpus(std::string_view text) {
  csv::ReadResult table = csv::read(text);
  if (table.unterminated_quote)
    throw DataError("corpus line " + std::to_string(table.unterminated_line) +
                    ": unterminated quoted cell");
  if (table.rows.empty()) throw DataError("corpus file is empty (missing header)");
  if (csv::join_row(table.rows.front().cells) != kCorpusHeader)
    throw DataError("corpus line 1: expected header '" + std::string(kCorpusHeader) + "'");

  std::vector<Entry> entries;
  for (std::size_t r = 1; r < table.rows.size(); ++r) {
    const csv::Row& row = table.rows[r];
    auto fail = [&](const std::string& what) {
      return DataError("corpus line " + std::to_string(row.line) + ": " + what);
    };
    if (row.cells.size() != 7)
      throw fail("expected 7 cells, found " + std::to_string(row.cells.size()));
    Entry e;
    e.id = row.cells[0];
    auto source = source_from_string(row.cells[1]);
    if (!source) throw fail("unknown source '" + row.cells[1] + "'");
    e.source = *source;
    if (!detail::parse_year(row.cells[2], e.year)) throw fail("bad year '" + row.cells[2] + "'");
    e.title = row.cells[3];
    e.abstract = row.cells[4];
    e.keywords = detail::split_any(row.cells[5], ";");
    e.authors = detail::split_any(row.cells[6], ";");
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace ingest
}  // namespace trendgram
