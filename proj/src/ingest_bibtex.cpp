#include <string>

#include "strings.hpp"
#include "trendgram/ingest.hpp"

namespace trendgram::ingest {
namespace {

using detail::is_space;

bool is_ident_char(char c) noexcept {
  return detail::is_ascii_alnum(c) || c == '_' || c == '-' || c == ':' || c == '.';
}

bool is_alpha(char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// Drops LaTeX commands and grouping braces. Escaped specials (\& \% \$ \# \_
// \{ \}) keep their character; "~" is a tie and becomes a space.
std::string strip_latex(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\\') {
      if (i + 1 >= s.size()) break;
      char next = s[i + 1];
      if (std::string_view("&%$#_{}").find(next) != std::string_view::npos) {
        out.push_back(next);
        ++i;
      } else if (is_alpha(next)) {
        ++i;
        while (i + 1 < s.size() && is_alpha(s[i + 1])) ++i;
        // "\LaTeX is" -> " is": a command name swallows one following space.
        if (i + 1 < s.size() && s[i + 1] == ' ') ++i;
      } else {
        ++i;  // accent such as \" \' \^ \~
      }
      continue;
    }
    if (c == '{' || c == '}') continue;
    out.push_back(c == '~' ? ' ' : c);
  }
  return out;
}

std::vector<std::string> split_authors(std::string_view value) {
  std::vector<std::string> authors;
  std::string current;
  for (const std::string& word : detail::split_any(value, " ")) {
    if (detail::to_lower(word) == "and") {
      if (!current.empty()) authors.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (!current.empty()) current.push_back(' ');
    current += word;
  }
  if (!current.empty()) authors.push_back(std::move(current));
  // ';' never occurs inside a name and is the corpus list separator.
  std::vector<std::string> out;
  for (const auto& a : authors)
    for (auto& piece : detail::split_any(a, ";")) out.push_back(std::move(piece));
  return out;
}

enum class Outcome { ok, unterminated, malformed };

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool eof() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return eof() ? '\0' : text_[pos_]; }
  std::size_t line() const noexcept { return line_; }
  std::size_t pos() const noexcept { return pos_; }

  void advance() noexcept {
    if (eof()) return;
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void skip_space() noexcept {
    while (!eof() && is_space(peek())) advance();
  }

  std::string_view read_ident() {
    std::size_t start = pos_;
    while (!eof() && is_ident_char(peek())) advance();
    return text_.substr(start, pos_ - start);
  }

  bool seek_at() noexcept {
    while (!eof() && peek() != '@') advance();
    return !eof();
  }

  // True when pos_ sits on a newline that is followed by what looks like the
  // start of another record ("@ident{"). Used to stop runaway values.
  bool at_record_start_after_newline() const noexcept {
    if (peek() != '\n') return false;
    std::size_t i = pos_ + 1;
    while (i < text_.size() && (text_[i] == ' ' || text_[i] == '\t' || text_[i] == '\r')) ++i;
    if (i >= text_.size() || text_[i] != '@') return false;
    ++i;
    std::size_t name_start = i;
    while (i < text_.size() && is_alpha(text_[i])) ++i;
    if (i == name_start) return false;
    while (i < text_.size() && (text_[i] == ' ' || text_[i] == '\t')) ++i;
    return i < text_.size() && (text_[i] == '{' || text_[i] == '(');
  }

  // Moves to the '@' following the newline detected above.
  void skip_to_next_at() noexcept {
    while (!eof() && peek() != '@') advance();
  }

  // Skips a balanced block whose opening delimiter was already consumed.
  bool skip_balanced(char closer) {
    int depth = 1;
    while (!eof()) {
      char c = peek();
      advance();
      if (c == '{' || (closer == ')' && c == '(')) {
        ++depth;
      } else if (c == '}' || (closer == ')' && c == ')')) {
        if (--depth == 0) return true;
      }
    }
    return false;
  }

  // Reads {...} or "..." with nested braces. Stops with `unterminated` if a
  // new record begins on a fresh line before the value closes.
  Outcome read_delimited(std::string& out) {
    char open = peek();
    advance();
    int depth = open == '{' ? 1 : 0;
    while (!eof()) {
      if (at_record_start_after_newline()) return Outcome::unterminated;
      char c = peek();
      if (c == '\\' && pos_ + 1 < text_.size()) {
        out.push_back(c);
        advance();
        out.push_back(peek());
        advance();
        continue;
      }
      if (open == '{') {
        if (c == '{') {
          ++depth;
        } else if (c == '}') {
          if (--depth == 0) {
            advance();
            return Outcome::ok;
          }
        }
      } else {
        if (c == '{') {
          ++depth;
        } else if (c == '}') {
          --depth;
        } else if (c == '"' && depth == 0) {
          advance();
          return Outcome::ok;
        }
      }
      out.push_back(c);
      advance();
    }
    return Outcome::unterminated;
  }

  std::string_view read_bare() {
    std::size_t start = pos_;
    while (!eof()) {
      char c = peek();
      if (is_space(c) || c == ',' || c == '}' || c == ')' || c == '#') break;
      advance();
    }
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

struct RawRecord {
  std::string key;
  std::size_t line = 0;
  std::string title, abstract, keywords, year, author;
  bool has_year = false;
};

// Parses "name = value (# value)*" pairs up to the record's closing delimiter.
Outcome read_fields(Scanner& sc, char closer, RawRecord& rec) {
  while (true) {
    sc.skip_space();
    if (sc.eof() || sc.peek() == '@') return Outcome::unterminated;
    if (sc.peek() == closer) {
      sc.advance();
      return Outcome::ok;
    }
    std::string name = detail::to_lower(sc.read_ident());
    if (name.empty()) return Outcome::malformed;
    sc.skip_space();
    if (sc.peek() != '=') return Outcome::malformed;
    sc.advance();

    std::string value;
    while (true) {
      sc.skip_space();
      char c = sc.peek();
      if (c == '{' || c == '"') {
        Outcome o = sc.read_delimited(value);
        if (o != Outcome::ok) return o;
      } else {
        std::string_view bare = sc.read_bare();
        if (bare.empty()) return sc.eof() || c == '@' ? Outcome::unterminated : Outcome::malformed;
        value += bare;
      }
      sc.skip_space();
      if (sc.peek() != '#') break;
      sc.advance();
    }

    auto assign = [&](std::string& slot) {
      if (slot.empty()) slot = std::move(value);
    };
    if (name == "title") {
      assign(rec.title);
    } else if (name == "abstract") {
      assign(rec.abstract);
    } else if (name == "keywords") {
      assign(rec.keywords);
    } else if (name == "author") {
      assign(rec.author);
    } else if (name == "year" && !rec.has_year) {
      rec.year = std::move(value);
      rec.has_year = true;
    }

    sc.skip_space();
    if (sc.peek() == ',') {
      sc.advance();
      continue;
    }
    if (sc.peek() == closer) {
      sc.advance();
      return Outcome::ok;
    }
    if (sc.eof() || sc.peek() == '@') return Outcome::unterminated;
    return Outcome::malformed;
  }
}

std::string describe(const RawRecord& rec) {
  std::string s = "record";
  if (!rec.key.empty()) s += " '" + rec.key + "'";
  return s;
}

}  // namespace

ParseResult parse_bibtex(std::string_view text, std::string_view id_prefix) {
  ParseResult result;
  Scanner sc(text);
  std::size_t ordinal = 0;

  while (sc.seek_at()) {
    RawRecord rec;
    rec.line = sc.line();
    std::size_t at_pos = sc.pos();
    sc.advance();
    sc.skip_space();
    std::string type = detail::to_lower(sc.read_ident());
    sc.skip_space();
    char open = sc.peek();
    if (type.empty() || (open != '{' && open != '(')) continue;  // stray '@' in comment text
    char closer = open == '{' ? '}' : ')';
    sc.advance();

    if (type == "comment" || type == "preamble" || type == "string") {
      sc.skip_balanced(closer);
      continue;
    }

    sc.skip_space();
    std::size_t key_start = sc.pos();
    while (!sc.eof() && sc.peek() != ',' && sc.peek() != closer && !is_space(sc.peek()) &&
           sc.peek() != '@')
      sc.advance();
    rec.key = std::string(text.substr(key_start, sc.pos() - key_start));
    sc.skip_space();
    if (sc.peek() == closer) {
      sc.advance();
      continue;  // empty record, nothing to extract
    }

    Outcome outcome = Outcome::malformed;
    if (sc.peek() == ',') {
      sc.advance();
      outcome = read_fields(sc, closer, rec);
    } else if (sc.eof() || sc.peek() == '@') {
      outcome = Outcome::unterminated;
    }

    if (outcome == Outcome::unterminated) {
      result.diagnostics.push_back(
          {rec.line, describe(rec) + " is not terminated (unbalanced braces)"});
      if (sc.at_record_start_after_newline()) sc.skip_to_next_at();
      continue;
    }
    if (outcome == Outcome::malformed) {
      result.diagnostics.push_back({rec.line, describe(rec) + " is malformed"});
      // Resume at the next record start after this one.
      if (sc.pos() == at_pos) sc.advance();
      while (!sc.eof() && !sc.at_record_start_after_newline()) sc.advance();
      sc.skip_to_next_at();
      continue;
    }

    if (!rec.has_year) {
      result.diagnostics.push_back({rec.line, describe(rec) + " has no year"});
      continue;
    }
    Entry entry;
    std::string year_text = detail::collapse_whitespace(strip_latex(rec.year));
    if (!detail::parse_year(year_text, entry.year)) {
      result.diagnostics.push_back(
          {rec.line, describe(rec) + " has non-numeric year '" + year_text + "'"});
      continue;
    }
    entry.title = detail::collapse_whitespace(strip_latex(rec.title));
    if (entry.title.empty()) {
      result.diagnostics.push_back({rec.line, describe(rec) + " has no title"});
      continue;
    }
    entry.abstract = detail::collapse_whitespace(strip_latex(rec.abstract));
    entry.keywords = detail::split_any(strip_latex(rec.keywords), ";,");
    entry.authors = split_authors(detail::collapse_whitespace(strip_latex(rec.author)));
    entry.source = Source::bibtex;
    entry.id = std::string(id_prefix) + ":" + std::to_string(++ordinal);
    result.entries.push_back(std::move(entry));
  }
  return result;
}

}  // namespace trendgram::ingest
