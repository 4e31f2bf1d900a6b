#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trendgram/entry.hpp"
#include "trendgram/error.hpp"

namespace trendgram::ingest {

/// Entries recovered from one export file plus per-record problems.
/// Parsers never abort on a bad record; they skip it and keep going.
struct ParseResult {
  std::vector<Entry> entries;
  std::vector<Diagnostic> diagnostics;
};

/// Bookkeeping for one merge run.
/// Invariant: total_out == total_in - incomplete_removed - duplicates_removed.
struct MergeReport {
  std::size_t total_in = 0;
  std::size_t incomplete_removed = 0;
  std::size_t duplicates_removed = 0;
  std::size_t total_out = 0;

  friend bool operator==(const MergeReport&, const MergeReport&) = default;
};

// BibTeX subset: @type{key, name = {value} | "value" | bareword, ...}.
// Recognized fields are title, abstract, keywords (split on ';' or ','),
// year and author (split on " and "). @string, @preamble and @comment blocks
// are skipped, crossref is not resolved, and LaTeX commands are dropped
// rather than decoded ("\"{o}" becomes "o").
//
// id_prefix defaults to the source tag; entries get ids "<prefix>:<ordinal>"
// where the ordinal counts accepted records from 1.
ParseResult parse_bibtex(std::string_view text, std::string_view id_prefix = "bibtex");

/// Logical field -> header name. Unset fields keep the IEEE Xplore export
/// header names.
struct CsvMapping {
  std::string title = "Document Title";
  std::string abstract = "Abstract";
  std::string keywords = "Author Keywords";
  std::string year = "Publication Year";
  std::string authors = "Authors";

  /// Applies one "field=Header Name" override. Throws std::invalid_argument
  /// on an unknown logical field or a missing '='.
  void set(std::string_view assignment);
};

/// Throws DataError when a mapped column is missing from the header.
ParseResult parse_csv(std::string_view text, const CsvMapping& mapping = {},
                      std::string_view id_prefix = "csv");

/// Refer/EndNote tagged records (%T, %A, %D, %K, %X), blank-line separated.
/// Lines without a tag continue the previous field.
ParseResult parse_endnote(std::string_view text, std::string_view id_prefix = "endnote");

struct FilterResult {
  std::vector<Entry> entries;
  std::size_t removed = 0;
};

/// Keeps entries that have at least one author and a non-empty abstract.
FilterResult filter_incomplete(std::vector<Entry> entries);

/// Keeps entries whose year lies in range.
FilterResult filter_years(std::vector<Entry> entries, YearRange range);

/// Case-folded title with punctuation removed and whitespace collapsed.
std::string normalize_title(std::string_view title);

/// Number of non-empty fields among abstract, keywords and authors.
int completeness(const Entry& entry) noexcept;

struct MergeResult {
  std::vector<Entry> entries;
  MergeReport report;
};

/// Concatenates the lists, drops incomplete entries, then collapses entries
/// with equal normalized title and equal year. The most complete entry of a
/// duplicate group survives (earliest in input order on ties) and takes the
/// group's first position.
MergeResult merge_dedup(const std::vector<std::vector<Entry>>& entry_lists);

// Canonical corpus file: header id,source,year,title,abstract,keywords,authors
// with keywords and authors ';'-joined. Text cells are always quoted.
std::string write_corpus(const std::vector<Entry>& entries);

/// Throws DataError (with line number) on a malformed corpus file.
std::vector<Entry> read_corpus(std::string_view text);

}  // namespace trendgram::ingest
