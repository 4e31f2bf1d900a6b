#pragma once

// Small string helpers shared by the parsers. Not part of the public API.

#include <string>
#include <string_view>
#include <vector>

namespace trendgram::detail {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool is_ascii_alnum(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

inline char ascii_lower(char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string_view trim(std::string_view s) noexcept;
std::string to_lower(std::string_view s);

/// Trims and replaces every whitespace run with a single space.
std::string collapse_whitespace(std::string_view s);

/// Splits on any of the separator characters; pieces are whitespace-collapsed
/// and empty pieces dropped.
std::vector<std::string> split_any(std::string_view s, std::string_view separators);

std::string join(const std::vector<std::string>& parts, std::string_view separator);

/// Parses a non-negative decimal year; rejects anything that is not all digits.
bool parse_year(std::string_view s, int& year) noexcept;

/// printf("%.*g") into a std::string.
std::string format_g(double value, int significant);

}  // namespace trendgram::detail
