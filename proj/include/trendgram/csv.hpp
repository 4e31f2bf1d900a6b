#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace trendgram::csv {

struct Row {
  std::size_t line = 0;  // physical line the row starts on, 1-based
  std::vector<std::string> cells;
};

struct ReadResult {
  std::vector<Row> rows;
  // Set when the input ends inside a quoted cell; rows holds everything
  // before the broken row.
  bool unterminated_quote = false;
  std::size_t unterminated_line = 0;
};

/// Splits RFC-4180 style text into rows. Accepts "\n" and "\r\n" line
/// endings, quoted cells with embedded separators, newlines and doubled
/// quotes. A trailing newline does not produce an empty row.
ReadResult read(std::string_view text);

/// Quotes a cell when it contains a comma, quote, CR or LF.
std::string escape_cell(std::string_view cell);

/// Always wraps the cell in quotes.
std::string quote_cell(std::string_view cell);

std::string join_row(const std::vector<std::string>& cells);

}  // namespace trendgram::csv
