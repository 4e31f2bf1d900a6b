#include <optional>
#include <stdexcept>

#include "strings.hpp"
#include "trendgram/csv.hpp"
#include "trendgram/ingest.hpp"

namespace trendgram::ingest {

void CsvMapping::set(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw std::invalid_argument("expected field=Header, got '" + std::string(assignment) + "'");
  std::string field = detail::to_lower(detail::trim(assignment.substr(0, eq)));
  std::string header(detail::trim(assignment.substr(eq + 1)));
  if (field == "title") {
    title = header;
  } else if (field == "abstract") {
    abstract = header;
  } else if (field == "keywords") {
    keywords = header;
  } else if (field == "year") {
    year = header;
  } else if (field == "authors") {
    authors = header;
  } else {
    throw std::invalid_argument("unknown CSV field '" + field +
                                "' (expected title, abstract, keywords, year or authors)");
  }
}

namespace {

std::size_t find_column(const std::vector<std::string>& header, const std::string& name,
                        std::string_view field) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (detail::trim(header[i]) == detail::trim(name)) return i;
  throw DataError("CSV header has no column '" + name + "' (mapped to " + std::string(field) + ")");
}

}  // namespace

ParseResult parse_csv(std::string_view text, const CsvMapping& mapping, std::string_view id_prefix) {
  ParseResult result;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  csv::ReadResult table = csv::read(text);
  if (table.unterminated_quote)
    result.diagnostics.push_back(
        {table.unterminated_line, "unterminated quoted cell; rest of file ignored"});
  if (table.rows.empty()) return result;

  const auto& header = table.rows.front().cells;
  const std::size_t title_col = find_column(header, mapping.title, "title");
  const std::size_t abstract_col = find_column(header, mapping.abstract, "abstract");
  const std::size_t keywords_col = find_column(header, mapping.keywords, "keywords");
  const std::size_t year_col = find_column(header, mapping.year, "year");
  const std::size_t authors_col = find_column(header, mapping.authors, "authors");

  std::size_t ordinal = 0;
  for (std::size_t r = 1; r < table.rows.size(); ++r) {
    const csv::Row& row = table.rows[r];
    bool blank = true;
    for (const auto& cell : row.cells) blank = blank && detail::trim(cell).empty();
    if (blank) continue;

    auto cell = [&](std::size_t col) -> std::string_view {
      return col < row.cells.size() ? std::string_view(row.cells[col]) : std::string_view();
    };
    Entry entry;
    if (!detail::parse_year(cell(year_col), entry.year)) {
      result.diagnostics.push_back(
          {row.line, "unparseable year '" + std::string(detail::trim(cell(year_col))) + "'"});
      continue;
    }
    entry.title = detail::collapse_whitespace(cell(title_col));
    if (entry.title.empty()) {
      result.diagnostics.push_back({row.line, "row has no title"});
      continue;
    }
    entry.abstract = detail::collapse_whitespace(cell(abstract_col));
    entry.keywords = detail::split_any(cell(keywords_col), ";");
    entry.authors = detail::split_any(cell(authors_col), ";");
    entry.source = Source::csv;
    entry.id = std::string(id_prefix) + ":" + std::to_string(++ordinal);
    result.entries.push_back(std::move(entry));
  }
  return result;
}

}  // namespace trendgram::ingest
