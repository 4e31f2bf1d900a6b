#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trendgram/entry.hpp"

namespace trendgram::textprep {

enum class Origin { title, abstract, keyword };

/// Lowercase word tokens of one sentence, tagged with where they came from.
/// Article words ("a", "an", "the") are already removed.
struct Sentence {
  std::vector<std::string> tokens;
  Origin origin = Origin::title;
  std::string entry_id;
  int year = 0;
};

/// Splits at '.', '!', '?', ';' or ':' followed by whitespace (or the end of
/// the text). The terminator is dropped; fragments are trimmed and empty
/// fragments discarded. "e.g.x" does not split.
std::vector<std::string> split_sentences(std::string_view text);

/// Lowercases, then splits on every character other than a letter, digit,
/// apostrophe or hyphen. Leading and trailing apostrophes and hyphens are
/// stripped from each token, so "open-source" stays whole and "--" vanishes.
/// Letters are ASCII plus any non-ASCII code point outside the Latin-1 and
/// General Punctuation symbol blocks; case folding covers ASCII and Latin-1.
std::vector<std::string> tokenize(std::string_view sentence);

bool is_article(std::string_view token) noexcept;

std::vector<std::string> remove_articles(std::vector<std::string> tokens);

/// tokenize + remove_articles.
std::vector<std::string> words(std::string_view text);

/// Title sentences, then abstract sentences, then one sentence per keyword.
/// Keywords are never sentence-split. Sentences may end up with no tokens
/// (e.g. a keyword that is only an article); they simply yield no n-grams.
std::vector<Sentence> entry_sentences(const Entry& entry);

}  // namespace trendgram::textprep
