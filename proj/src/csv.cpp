#include "trendgram/csv.hpp"

namespace trendgram::csv {

ReadResult read(std::string_view text) {
  ReadResult result;
  Row row;
  std::string cell;
  std::size_t line = 1;
  std::size_t i = 0;
  bool row_open = false;  // any character consumed for the current row

  auto finish_cell = [&] {
    row.cells.push_back(std::move(cell));
    cell.clear();
  };
  auto finish_row = [&] {
    finish_cell();
    result.rows.push_back(std::move(row));
    row = Row{};
    row_open = false;
  };

  while (i < text.size()) {
    if (!row_open) {
      row.line = line;
      row_open = true;
    }
    char c = text[i];
    if (c == '"' && cell.empty()) {
      // Quoted cell: runs until a lone quote.
      std::size_t start_line = line;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        char q = text[i];
        if (q == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            cell.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        if (q == '\n') ++line;
        cell.push_back(q);
        ++i;
      }
      if (!closed) {
        result.unterminated_quote = true;
        result.unterminated_line = start_line;
        return result;
      }
      continue;
    }
    if (c == ',') {
      finish_cell();
      ++i;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      ++line;
      finish_row();
    } else {
      cell.push_back(c);
      ++i;
    }
  }
  if (row_open) finish_row();
  return result;
}

std::string quote_cell(std::string_view cell) {
  std::string out;
  out.reserve(cell.size() + 2);
  out.push_back('"');
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string escape_cell(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
  return quote_cell(cell);
}

std::string join_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(',');
    out += escape_cell(cells[i]);
  }
  return out;
}

}  // namespace trendgram::csv
