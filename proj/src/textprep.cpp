#include "trendgram/textprep.hpp"

#include "strings.hpp"

namespace trendgram::textprep {
namespace {

bool is_terminator(char c) noexcept {
  return c == '.' || c == '!' || c == '?' || c == ';' || c == ':';
}

// Decodes one UTF-8 sequence starting at s[i]; advances i. Invalid bytes are
// returned as themselves (Latin-1 interpretation) so nothing is lost.
char32_t next_code_point(std::string_view s, std::size_t& i) noexcept {
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  std::size_t len = b0 < 0x80 ? 1 : (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : (b0 >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || i + len > s.size()) {
    ++i;
    return b0;
  }
  char32_t cp = len == 1 ? b0 : len == 2 ? (b0 & 0x1F) : len == 3 ? (b0 & 0x0F) : (b0 & 0x07);
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b >> 6) != 0x2) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_apostrophe(char32_t cp) noexcept { return cp == U'\'' || cp == U'’'; }

bool is_word_char(char32_t cp) noexcept {
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    return detail::is_ascii_alnum(c) || c == '\'' || c == '-';
  }
  if (cp <= 0xBF) return false;                    // Latin-1 punctuation and symbols
  if (cp == 0xD7 || cp == 0xF7) return false;      // multiplication / division signs
  if (cp >= 0x2000 && cp <= 0x206F) return is_apostrophe(cp);  // General Punctuation
  return true;
}

char32_t fold_case(char32_t cp) noexcept {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  return cp;
}

void finish_token(std::string& token, std::vector<std::string>& out) {
  // Strip leading/trailing apostrophes (ASCII or U+2019) and hyphens.
  auto strippable_front = [&] {
    if (token.empty()) return std::size_t{0};
    if (token[0] == '\'' || token[0] == '-') return std::size_t{1};
    if (token.compare(0, 3, "\xE2\x80\x99") == 0) return std::size_t{3};
    return std::size_t{0};
  };
  auto strippable_back = [&] {
    if (token.empty()) return std::size_t{0};
    if (token.back() == '\'' || token.back() == '-') return std::size_t{1};
    if (token.size() >= 3 && token.compare(token.size() - 3, 3, "\xE2\x80\x99") == 0)
      return std::size_t{3};
    return std::size_t{0};
  };
  for (std::size_t n; (n = strippable_front()) != 0;) token.erase(0, n);
  for (std::size_t n; (n = strippable_back()) != 0;) token.erase(token.size() - n);
  if (!token.empty()) out.push_back(std::move(token));
  token.clear();
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string_view piece = detail::trim(text.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_terminator(text[i])) continue;
    bool boundary = i + 1 == text.size() || detail::is_space(text[i + 1]);
    if (!boundary) continue;
    emit(i);
    start = i + 1;
  }
  if (start < text.size()) emit(text.size());
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  std::string token;
  std::size_t i = 0;
  while (i < sentence.size()) {
    char32_t cp = next_code_point(sentence, i);
    if (is_word_char(cp)) {
      append_utf8(token, fold_case(cp));
    } else {
      finish_token(token, out);
    }
  }
  finish_token(token, out);
  return out;
}

bool is_article(std::string_view token) noexcept {
  return token == "a" || token == "an" || token == "the";
}

std::vector<std::string> remove_articles(std::vector<std::string> tokens) {
  std::erase_if(tokens, [](const std::string& t) { return is_article(t); });
  return tokens;
}

std::vector<std::string> words(std::string_view text) { return remove_articles(tokenize(text)); }

std::vector<Sentence> entry_sentences(const Entry& entry) {
  std::vector<Sentence> out;
  auto add = [&](std::string_view text, Origin origin) {
    out.push_back(Sentence{words(text), origin, entry.id, entry.year});
  };
  for (const auto& s : split_sentences(entry.title)) add(s, Origin::title);
  for (const auto& s : split_sentences(entry.abstract)) add(s, Origin::abstract);
  for (const auto& k : entry.keywords) add(k, Origin::keyword);
  return out;
}

}  // namespace trendgram::textprep
