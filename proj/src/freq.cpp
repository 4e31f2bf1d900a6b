#include "trendgram/freq.hpp"

#include <algorithm>
#include <json.hpp>

#include "strings.hpp"
#include "trendgram/csv.hpp"
#include "trendgram/error.hpp"
#include "trendgram/textprep.hpp"

namespace trendgram::freq {

FrequencyTable::FrequencyTable(ngram::RecordSet records) : records_(std::move(records)) {
  for (const auto& r : records_) {
    by_ngram_[r.ngram][r.year] += r.count;
    totals_[{r.n, r.year}] += r.count;
    years_.push_back(r.year);
  }
  std::sort(years_.begin(), years_.end());
  years_.erase(std::unique(years_.begin(), years_.end()), years_.end());
}

const std::map<int, std::uint64_t>& FrequencyTable::counts_by_year(std::string_view ngram) const {
  static const std::map<int, std::uint64_t> kEmpty;
  auto it = by_ngram_.find(std::string(ngram));
  return it == by_ngram_.end() ? kEmpty : it->second;
}

std::uint64_t FrequencyTable::count(std::string_view ngram, int year) const {
  const auto& years = counts_by_year(ngram);
  auto it = years.find(year);
  return it == years.end() ? 0 : it->second;
}

std::uint64_t FrequencyTable::total(int n, int year) const {
  auto it = totals_.find({n, year});
  return it == totals_.end() ? 0 : it->second;
}

FrequencyTable build_table(ngram::RecordSet records) { return FrequencyTable(std::move(records)); }

Point frequency(const FrequencyTable& table, std::span<const std::string> phrase, int year) {
  const int n = static_cast<int>(phrase.size());
  const std::uint64_t denominator = table.total(n, year);
  if (denominator == 0) return {0.0, false};
  const std::uint64_t numerator = table.count(detail::join({phrase.begin(), phrase.end()}, " "), year);
  return {static_cast<double>(numerator) / static_cast<double>(denominator), true};
}

Point frequency_list(const FrequencyTable& table, std::span<const Phrase> phrases, int year) {
  Point sum;
  for (const auto& p : phrases) {
    Point f = frequency(table, p, year);
    sum.value += f.value;
    sum.has_data = sum.has_data || f.has_data;
  }
  return sum;
}

namespace {

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

Query parse_query(std::string_view text) {
  if (detail::trim(text).empty()) throw QueryError("empty query", std::string(text));
  Query query;
  for (std::string_view fragment : split_on(text, ',')) {
    std::string label(detail::trim(fragment));
    if (label.empty()) throw QueryError("empty series in query '" + std::string(text) + "'", label);
    Series series{label, {}};
    for (std::string_view part : split_on(fragment, '+')) {
      Phrase phrase = textprep::words(part);
      std::string shown(detail::trim(part));
      if (phrase.empty())
        throw QueryError("empty phrase in series '" + label + "'", shown.empty() ? label : shown);
      if (phrase.size() > static_cast<std::size_t>(ngram::kMaxLength))
        throw QueryError("phrase '" + shown + "' has more than 4 words", shown);
      series.phrases.push_back(std::move(phrase));
    }
    query.series.push_back(std::move(series));
  }
  return query;
}

std::string to_string(const Query& query) {
  std::vector<std::string> labels;
  for (const auto& s : query.series) labels.push_back(s.label);
  return detail::join(labels, ", ");
}

std::vector<FrequencySeries> evaluate(const FrequencyTable& table, const Query& query,
                                      YearRange range) {
  std::vector<FrequencySeries> out;
  out.reserve(query.series.size());
  for (const auto& s : query.series) {
    FrequencySeries fs{s.label, {}};
    for (int year = range.min; year <= range.max; ++year)
      fs.points.push_back({year, frequency_list(table, s.phrases, year)});
    out.push_back(std::move(fs));
  }
  return out;
}

std::string write_series_csv(std::span<const FrequencySeries> series) {
  std::string out = "label,year,frequency,has_data\n";
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      out += csv::escape_cell(s.label);
      out.push_back(',');
      out += std::to_string(p.year);
      out.push_back(',');
      out += detail::format_g(p.point.value, 10);
      out.push_back(',');
      out += p.point.has_data ? "1" : "0";
      out.push_back('\n');
    }
  }
  return out;
}

std::string write_series_json(std::span<const FrequencySeries> series) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& s : series) {
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& p : s.points)
      points.push_back({{"year", p.year}, {"frequency", p.point.value}, {"has_data", p.point.has_data}});
    doc.push_back({{"label", s.label}, {"points", std::move(points)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace trendgram::freq
