#include <string>

#include "strings.hpp"
#include "trendgram/ingest.hpp"

namespace trendgram::ingest {
namespace {

struct PendingRecord {
  std::size_t line = 0;
  std::string title;
  std::string abstract;
  std::vector<std::string> authors;
  std::vector<std::string> keywords;
  std::string year;
  bool has_year = false;
  bool empty = true;
};

void append_text(std::string& slot, std::string_view text) {
  if (!slot.empty()) slot.push_back(' ');
  slot += text;
}

}  // namespace

ParseResult parse_endnote(std::string_view text, std::string_view id_prefix) {
  ParseResult result;
  PendingRecord rec;
  char last_tag = '\0';
  std::size_t ordinal = 0;

  auto flush = [&] {
    if (rec.empty) return;
    Entry entry;
    if (!rec.has_year) {
      result.diagnostics.push_back({rec.line, "record has no %D year"});
    } else if (!detail::parse_year(rec.year, entry.year)) {
      result.diagnostics.push_back(
          {rec.line, "record has non-numeric %D year '" + detail::collapse_whitespace(rec.year) + "'"});
    } else if (entry.title = detail::collapse_whitespace(rec.title); entry.title.empty()) {
      result.diagnostics.push_back({rec.line, "record has no %T title"});
    } else {
      entry.abstract = detail::collapse_whitespace(rec.abstract);
      entry.authors = std::move(rec.authors);
      entry.keywords = std::move(rec.keywords);
      entry.source = Source::endnote;
      entry.id = std::string(id_prefix) + ":" + std::to_string(++ordinal);
      result.entries.push_back(std::move(entry));
    }
    rec = PendingRecord{};
    last_tag = '\0';
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (detail::trim(line).empty()) {
      flush();
      continue;
    }

    std::string_view value = line;
    char tag = '\0';
    bool continuation = true;
    if (line.size() >= 2 && line[0] == '%') {
      tag = line[1];
      value = line.substr(2);
      continuation = false;
    }
    if (rec.empty) {
      rec.empty = false;
      rec.line = line_no;
    }
    if (continuation) tag = last_tag;
    else last_tag = tag;
    value = detail::trim(value);

    switch (tag) {
      case 'T':
        append_text(rec.title, value);
        break;
      case 'X':
        append_text(rec.abstract, value);
        break;
      case 'A':
        // A continued %A line is still the same author.
        if (continuation && !rec.authors.empty()) {
          append_text(rec.authors.back(), value);
        } else {
          for (auto& a : detail::split_any(value, ";")) rec.authors.push_back(std::move(a));
        }
        break;
      case 'K':
        for (auto& k : detail::split_any(value, ";")) rec.keywords.push_back(std::move(k));
        break;
      case 'D':
        append_text(rec.year, value);
        rec.has_year = true;
        break;
      default:
        break;
    }
  }
  flush();
  return result;
}

}  // namespace trendgram::ingest
