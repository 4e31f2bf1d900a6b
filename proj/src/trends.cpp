#include "trendgram/trends.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "strings.hpp"
#include "trendgram/error.hpp"
#include "trendgram/plot.hpp"

namespace trendgram::trends {

double slope(const freq::FrequencySeries& series) {
  double year_sum = 0;
  double value_sum = 0;
  std::size_t count = 0;
  for (const auto& p : series.points) {
    if (!p.point.has_data) continue;
    year_sum += p.year;
    value_sum += p.point.value;
    ++count;
  }
  if (count < 2)
    throw std::domain_error("slope of '" + series.label + "' is undefined: fewer than 2 years with data");
  const double year_mean = year_sum / double(count);
  const double value_mean = value_sum / double(count);
  double sxy = 0;
  double sxx = 0;
  for (const auto& p : series.points) {
    if (!p.point.has_data) continue;
    const double dx = p.year - year_mean;
    sxy += dx * (p.point.value - value_mean);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::optional<YearRange> year_span(const freq::FrequencyTable& table) {
  if (table.years().empty()) return std::nullopt;
  return YearRange{table.years().front(), table.years().back()};
}

freq::FrequencySeries ngram_series(const freq::FrequencyTable& table, const std::string& ngram,
                                   YearRange range) {
  freq::Query query{{freq::Series{ngram, {detail::split_any(ngram, " ")}}}};
  return std::move(freq::evaluate(table, query, range).front());
}

std::vector<TrendEntry> rank(const freq::FrequencyTable& table, const RankOptions& options) {
  std::vector<TrendEntry> candidates;
  const auto span = options.range ? options.range : year_span(table);
  if (!span) return candidates;
  const YearRange range = *span;

  // Records are sorted by (n, ngram, year), so each ngram is one run.
  const auto& records = table.records();
  for (std::size_t i = 0; i < records.size();) {
    std::size_t end = i;
    while (end < records.size() && records[end].n == records[i].n &&
           records[end].ngram == records[i].ngram)
      ++end;
    if (records[i].n == options.n) {
      TrendEntry entry;
      entry.ngram = records[i].ngram;
      entry.n = records[i].n;
      for (std::size_t r = i; r < end; ++r) {
        if (!range.contains(records[r].year)) continue;
        entry.total_count += records[r].count;
        ++entry.years_with_data;
      }
      if (entry.total_count >= options.min_support && entry.years_with_data >= options.min_years) {
        freq::FrequencySeries series = ngram_series(table, entry.ngram, range);
        std::size_t with_data = 0;
        double value_sum = 0;
        for (const auto& p : series.points) {
          if (!p.point.has_data) continue;
          ++with_data;
          value_sum += p.point.value;
        }
        if (with_data >= 2) {
          entry.slope = slope(series);
          entry.mean_freq = value_sum / double(with_data);
          candidates.push_back(std::move(entry));
        }
      }
    }
    i = end;
  }

  const bool rising = options.direction == Direction::rising;
  std::sort(candidates.begin(), candidates.end(), [rising](const TrendEntry& a, const TrendEntry& b) {
    if (a.slope != b.slope) return rising ? a.slope > b.slope : a.slope < b.slope;
    if (a.total_count != b.total_count) return a.total_count > b.total_count;
    return a.ngram < b.ngram;
  });
  if (candidates.size() > options.k) candidates.resize(options.k);
  return candidates;
}

namespace {

std::string page_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "plot-%04zu.svg", index + 1);
  return buf;
}

}  // namespace

Catalog build_catalog(const freq::FrequencyTable& table, const CatalogSpec& spec) {
  if (table.empty()) throw std::invalid_argument("cannot build a catalog from an empty table");
  if (spec.limit == 0) throw std::invalid_argument("catalog limit must be at least 1");
  const YearRange range = spec.range ? *spec.range : *year_span(table);

  struct Candidate {
    std::string ngram;
    int n;
    std::uint64_t total;
  };
  std::vector<Candidate> candidates;
  const auto& records = table.records();
  for (const auto& r : records) {
    if (!range.contains(r.year)) continue;
    if (candidates.empty() || candidates.back().ngram != r.ngram || candidates.back().n != r.n)
      candidates.push_back({r.ngram, r.n, 0});
    candidates.back().total += r.count;
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.total != b.total) return a.total > b.total;
    return a.ngram < b.ngram;
  });
  if (candidates.size() > spec.limit) candidates.resize(spec.limit);

  Catalog catalog;
  std::string rows;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    freq::FrequencySeries series = ngram_series(table, c.ngram, range);
    CatalogPage page{c.ngram, c.n, c.total, page_name(i), plot::render({&series, 1}, c.ngram)};
    rows += "<tr><td>" + plot::xml_escape(c.ngram) + "</td><td>" + std::to_string(c.total) +
            "</td><td><a href=\"" + page.file_name + "\">" + page.file_name + "</a></td></tr>\n";
    catalog.pages.push_back(std::move(page));
  }
  catalog.index_html =
      "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>Trend catalog</title>\n"
      "</head>\n<body>\n<h1>Trend catalog</h1>\n<p>" +
      std::to_string(catalog.pages.size()) + " most frequent n-grams, " +
      std::to_string(range.min) + "&ndash;" + std::to_string(range.max) +
      ".</p>\n<table>\n<tr><th>ngram</th><th>total</th><th>link</th></tr>\n" + rows +
      "</table>\n</body>\n</html>\n";
  return catalog;
}

void write_catalog(const Catalog& catalog, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw DataError("cannot write " + path.string());
  };
  write(dir / "index.html", catalog.index_html);
  for (const auto& page : catalog.pages) write(dir / page.file_name, page.svg);
}

}  // namespace trendgram::trends
