#pragma once

// Test-only helpers: fixture loading, random corpora and the naive reference
// counter. The reference code deliberately shares nothing with src/ beyond
// the public data types, so agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trendgram/entry.hpp"
#include "trendgram/ngram.hpp"
#include "trendgram/textprep.hpp"

namespace testing {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& name) {
  return read_text(std::string(TRENDGRAM_FIXTURE_DIR) + "/" + name);
}

inline trendgram::Entry make_entry(std::string id, std::string title, int year,
                                   std::string abstract = "Some abstract.",
                                   std::vector<std::string> authors = {"A. Author"},
                                   std::vector<std::string> keywords = {}) {
  trendgram::Entry e;
  e.id = std::move(id);
  e.title = std::move(title);
  e.abstract = std::move(abstract);
  e.authors = std::move(authors);
  e.keywords = std::move(keywords);
  e.year = year;
  return e;
}

inline trendgram::textprep::Sentence sentence(std::vector<std::string> tokens, int year) {
  return {std::move(tokens), trendgram::textprep::Origin::abstract, "t:1", year};
}

// Stopwords read straight from the bundled file, one per non-comment line.
inline std::vector<std::string> reference_stopwords() {
  std::vector<std::string> words;
  std::istringstream in(read_text(std::string(TRENDGRAM_DATA_DIR) + "/stoplists/snowball-english.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    words.push_back(line);
  }
  return words;
}

inline std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

struct NaiveRecord {
  int n;
  std::string ngram;
  int year;
  std::uint64_t count;
};

// Nested loops and linear searches only.
inline std::vector<NaiveRecord> naive_count(const std::vector<trendgram::textprep::Sentence>& sentences,
                                            const std::vector<std::string>& stopwords, int n_max = 4) {
  std::vector<NaiveRecord> out;
  for (const auto& s : sentences) {
    for (int n = 1; n <= n_max; ++n) {
      for (int start = 0; start + n <= static_cast<int>(s.tokens.size()); ++start) {
        int stop = 0;
        std::string text;
        for (int j = start; j < start + n; ++j) {
          bool found = false;
          for (const auto& w : stopwords)
            if (w == s.tokens[j]) found = true;
          if (found) stop++;
          if (j > start) text += " ";
          text += s.tokens[j];
        }
        // at least half stopwords -> excluded
        if (stop * 2 >= n) continue;
        bool merged = false;
        for (auto& r : out) {
          if (r.n == n && r.ngram == text && r.year == s.year) {
            r.count++;
            merged = true;
          }
        }
        if (!merged) out.push_back({n, text, s.year, 1});
      }
    }
  }
  return out;
}

inline double naive_freq(const std::vector<NaiveRecord>& records, const std::string& ngram, int year) {
  int n = 1;
  for (char c : ngram)
    if (c == ' ') n++;
  std::uint64_t num = 0, den = 0;
  for (const auto& r : records) {
    if (r.year != year || r.n != n) continue;
    den += r.count;
    if (r.ngram == ngram) num += r.count;
  }
  return den == 0 ? 0.0 : double(num) / double(den);
}

// Vocabulary mixing content words and stopwords so the filter engages.
inline const std::vector<std::string>& random_vocabulary() {
  static const std::vector<std::string> vocab{
      "program", "comprehension", "code",    "analysis", "dynamic", "static", "feature",
      "location", "slicing",      "legacy",  "systems",  "of",      "and",    "in",
      "to",       "is",           "for",     "with"};
  return vocab;
}

inline std::vector<trendgram::textprep::Sentence> random_sentences(std::mt19937& rng, int max_sentences,
                                                                   int year_min = 2000,
                                                                   int year_max = 2004) {
  std::uniform_int_distribution<int> count_dist(1, max_sentences);
  std::uniform_int_distribution<int> len_dist(0, 9);
  std::uniform_int_distribution<int> year_dist(year_min, year_max);
  std::uniform_int_distribution<std::size_t> word_dist(0, random_vocabulary().size() - 1);
  std::vector<trendgram::textprep::Sentence> out;
  const int count = count_dist(rng);
  for (int i = 0; i < count; ++i) {
    std::vector<std::string> tokens;
    const int len = len_dist(rng);
    for (int j = 0; j < len; ++j) tokens.push_back(random_vocabulary()[word_dist(rng)]);
    out.push_back(sentence(std::move(tokens), year_dist(rng)));
  }
  return out;
}

inline trendgram::ngram::RecordSet random_records(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_dist(0, 30);
  std::uniform_int_distribution<int> n_dist(1, 4);
  std::uniform_int_distribution<int> year_dist(1990, 2030);
  std::uniform_int_distribution<std::uint64_t> count_dist(1, 1'000'000);
  std::uniform_int_distribution<std::size_t> word_dist(0, random_vocabulary().size() - 1);
  std::vector<trendgram::ngram::NgramRecord> records;
  const int size = size_dist(rng);
  for (int i = 0; i < size; ++i) {
    trendgram::ngram::NgramRecord r;
    r.n = n_dist(rng);
    for (int j = 0; j < r.n; ++j) {
      if (j) r.ngram += ' ';
      r.ngram += random_vocabulary()[word_dist(rng)];
    }
    r.year = year_dist(rng);
    r.count = count_dist(rng);
    records.push_back(std::move(r));
  }
  std::sort(records.begin(), records.end());
  records.erase(std::unique(records.begin(), records.end(),
                            [](const auto& a, const auto& b) {
                              return a.n == b.n && a.ngram == b.ngram && a.year == b.year;
                            }),
                records.end());
  return records;
}

// Ten years (2000..2009) of sentences: three flat background bigrams, one
// bigram doubling every year and one halving every year.
inline std::vector<trendgram::textprep::Sentence> planted_sentences() {
  std::vector<trendgram::textprep::Sentence> out;
  for (int i = 0; i < 10; ++i) {
    const int year = 2000 + i;
    auto repeat = [&](std::vector<std::string> tokens, int times) {
      for (int k = 0; k < times; ++k) out.push_back(sentence(tokens, year));
    };
    repeat({"source", "code"}, 200);
    repeat({"case", "study"}, 100);
    repeat({"reverse", "engineering"}, 150);
    repeat({"feature", "location"}, 1 << i);
    repeat({"program", "slicing"}, 1 << (9 - i));
  }
  return out;
}

// Least-squares slope by the textbook uncentered formula in long double.
inline double closed_form_slope(const std::vector<std::pair<int, double>>& points) {
  long double n = 0, sx = 0, sy = 0, sxy = 0, sxx = 0;
  for (const auto& [x, y] : points) {
    n += 1;
    sx += x;
    sy += y;
    sxy += static_cast<long double>(x) * y;
    sxx += static_cast<long double>(x) * x;
  }
  return static_cast<double>((n * sxy - sx * sy) / (n * sxx - sx * sx));
}

}  // namespace testing
