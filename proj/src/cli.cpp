#include "trendgram/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strings.hpp"
#include "trendgram/error.hpp"
#include "trendgram/freq.hpp"
#include "trendgram/ingest.hpp"
#include "trendgram/ngram.hpp"
#include "trendgram/plot.hpp"
#include "trendgram/textprep.hpp"
#include "trendgram/trends.hpp"

namespace trendgram::cli {

const std::vector<DemoQuery>& demo_queries() {
  static const std::vector<DemoQuery> queries{
      {"methods", "Types of research in program comprehension",
       "case study, experiment, review+survey"},
      {"analysis", "Static vs. dynamic analysis", "static analysis, dynamic analysis"},
      {"techniques", "Feature location vs. visualization", "feature location, visualization"},
      {"slicing", "Program slicing, code clone detection", "program slicing, clone detection"},
      {"subjects", "Studied systems: legacy vs. open source", "legacy, open source"},
  };
  return queries;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw DataError("cannot write " + path);
}

// "-" or empty means standard output.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-")
    out << content;
  else
    write_file(path, content);
}

YearRange checked_range(int from, int to) {
  if (from > to)
    throw UsageError("year range is empty: " + std::to_string(from) + " > " + std::to_string(to));
  return {from, to};
}

ngram::Stoplist load_stoplist(const Config& config) {
  std::optional<std::string> path = config.stoplist_path;
  if (!path) {
    if (const char* env = std::getenv("TRENDGRAM_STOPLIST"); env && *env) path = env;
  }
  if (!path) return ngram::Stoplist::english();
  return ngram::Stoplist::parse(read_file(*path));
}

freq::FrequencyTable load_table(const std::string& path) {
  return freq::build_table(ngram::read_records(read_file(path)));
}

struct IngestArgs {
  std::vector<std::string> bibtex, csv, endnote, csv_map;
  std::string output;
};

int do_ingest(const IngestArgs& args, const Config& config, std::ostream& out, std::ostream& err) {
  const YearRange range = checked_range(config.year_min, config.year_max);
  ingest::CsvMapping mapping;
  for (const auto& m : args.csv_map) {
    try {
      mapping.set(m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (args.bibtex.empty() && args.csv.empty() && args.endnote.empty())
    throw UsageError("ingest needs at least one --bibtex, --csv or --endnote file");

  std::vector<std::vector<Entry>> lists;
  std::size_t out_of_range = 0;
  auto take = [&](const std::string& path, ingest::ParseResult parsed) {
    for (const auto& d : parsed.diagnostics)
      err << path << ":" << d.line << ": " << d.message << "\n";
    auto in_range = ingest::filter_years(std::move(parsed.entries), range);
    out_of_range += in_range.removed;
    lists.push_back(std::move(in_range.entries));
  };
  auto prefix = [](std::string_view tag, std::size_t index) {
    return index == 0 ? std::string(tag) : std::string(tag) + std::to_string(index + 1);
  };
  for (std::size_t i = 0; i < args.bibtex.size(); ++i)
    take(args.bibtex[i], ingest::parse_bibtex(read_file(args.bibtex[i]), prefix("bibtex", i)));
  for (std::size_t i = 0; i < args.csv.size(); ++i)
    take(args.csv[i], ingest::parse_csv(read_file(args.csv[i]), mapping, prefix("csv", i)));
  for (std::size_t i = 0; i < args.endnote.size(); ++i)
    take(args.endnote[i], ingest::parse_endnote(read_file(args.endnote[i]), prefix("endnote", i)));

  if (out_of_range > 0)
    err << "skipped " << out_of_range << " entries outside " << range.min << "-" << range.max << "\n";
  ingest::MergeResult merged = ingest::merge_dedup(lists);
  emit(args.output, ingest::write_corpus(merged.entries), out);
  err << "total_in: " << merged.report.total_in << "\n"
      << "incomplete_removed: " << merged.report.incomplete_removed << "\n"
      << "duplicates_removed: " << merged.report.duplicates_removed << "\n"
      << "total_out: " << merged.report.total_out << "\n";
  return kExitOk;
}

int do_extract(const std::string& input, const std::string& output, const Config& config,
               std::ostream& out) {
  const ngram::Stoplist stoplist = load_stoplist(config);
  const std::vector<Entry> entries = ingest::read_corpus(read_file(input));
  ngram::Counter counter(stoplist, 1, config.nmax);
  for (const auto& e : entries)
    for (const auto& s : textprep::entry_sentences(e)) counter.add(s);
  emit(output, ngram::write_records(counter.records()), out);
  return kExitOk;
}

int do_query(const std::string& input, const std::string& query_text, YearRange range,
             const std::string& output, const std::string& svg_path, std::ostream& out) {
  freq::Query query;
  try {
    query = freq::parse_query(query_text);
  } catch (const QueryError& e) {
    throw UsageError(e.what());
  }
  const freq::FrequencyTable table = load_table(input);
  const auto series = freq::evaluate(table, query, range);
  const bool json = std::filesystem::path(output).extension() == ".json";
  emit(output, json ? freq::write_series_json(series) : freq::write_series_csv(series), out);
  if (!svg_path.empty()) write_file(svg_path, plot::render(series, query_text));
  return kExitOk;
}

int do_top(const std::string& input, int n, std::size_t k, std::ostream& out) {
  const ngram::RecordSet records = ngram::read_records(read_file(input));
  std::size_t rank = 0;
  for (const auto& row : ngram::top_ngrams(records, n, k))
    out << ++rank << ". " << row.ngram << " " << row.total << "\n";
  return kExitOk;
}

// Missing bounds default to the table's first/last year.
std::optional<YearRange> resolve_range(const freq::FrequencyTable& table, std::optional<int> from,
                                       std::optional<int> to) {
  if (!from && !to) return std::nullopt;
  const auto span = trends::year_span(table).value_or(YearRange{});
  return checked_range(from.value_or(span.min), to.value_or(span.max));
}

int do_trends(const std::string& input, trends::RankOptions options, std::optional<int> from,
              std::optional<int> to, std::ostream& out) {
  const freq::FrequencyTable table = load_table(input);
  options.range = resolve_range(table, from, to);
  out << "rank,ngram,slope,total_count\n";
  std::size_t rank = 0;
  for (const auto& t : trends::rank(table, options))
    out << ++rank << "," << t.ngram << "," << detail::format_g(t.slope, 10) << "," << t.total_count
        << "\n";
  return kExitOk;
}

int do_catalog(const std::string& input, const std::string& dir, trends::CatalogSpec spec,
               std::optional<int> from, std::optional<int> to, std::ostream& err) {
  const freq::FrequencyTable table = load_table(input);
  if (table.empty()) throw DataError(input + " has no records; nothing to catalog");
  spec.range = resolve_range(table, from, to);
  const trends::Catalog catalog = trends::build_catalog(table, spec);
  trends::write_catalog(catalog, dir);
  err << "wrote " << catalog.pages.size() << " plots to " << dir << "\n";
  return kExitOk;
}

int do_demo(const std::string& input, const std::string& dir, YearRange range, std::ostream& err) {
  const freq::FrequencyTable table = load_table(input);
  std::filesystem::create_directories(dir);
  for (const auto& demo : demo_queries()) {
    const auto series = freq::evaluate(table, freq::parse_query(demo.query), range);
    const std::filesystem::path base = std::filesystem::path(dir) / demo.name;
    write_file(base.string() + ".svg", plot::render(series, demo.title));
    write_file(base.string() + ".csv", freq::write_series_csv(series));
    err << "wrote " << base.string() << ".svg\n";
  }
  return kExitOk;
}

// CLI11 wants argc/argv.
struct Argv {
  explicit Argv(const std::vector<std::string>& args) {
    storage.push_back("trendgram");
    storage.insert(storage.end(), args.begin(), args.end());
    for (auto& s : storage) pointers.push_back(s.data());
  }
  int argc() const { return static_cast<int>(pointers.size()); }
  const char* const* argv() const { return pointers.data(); }

  std::vector<std::string> storage;
  std::vector<char*> pointers;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Per-year n-gram frequency analysis of bibliographic metadata", "trendgram"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  std::string input, output, query_text;
  int from = config.year_min, to = config.year_max;
  std::optional<int> from_opt, to_opt;
  std::string svg_path;
  int n = 2;
  std::size_t k = 0;
  std::string direction = "rising";
  trends::RankOptions rank_options;
  trends::CatalogSpec catalog_spec;
  std::string stoplist;
  int min_years = rank_options.min_years;

  auto* ingest_cmd = app.add_subcommand("ingest", "Parse, merge and deduplicate exported metadata");
  ingest_cmd->add_option("--bibtex", ingest_args.bibtex, "BibTeX export(s)");
  ingest_cmd->add_option("--csv", ingest_args.csv, "CSV export(s)");
  ingest_cmd->add_option("--csv-map", ingest_args.csv_map,
                         "Column mapping field=Header (title, abstract, keywords, year, authors)");
  ingest_cmd->add_option("--endnote", ingest_args.endnote, "EndNote/refer export(s)");
  ingest_cmd->add_option("--year-min", config.year_min, "First year kept")->capture_default_str();
  ingest_cmd->add_option("--year-max", config.year_max, "Last year kept")->capture_default_str();
  ingest_cmd->add_option("-o,--output", ingest_args.output, "Corpus CSV (default: stdout)");

  auto* extract_cmd = app.add_subcommand("extract", "Count n-grams per year into a records file");
  extract_cmd->add_option("-i,--input", input, "Corpus CSV")->required();
  extract_cmd->add_option("-o,--output", output, "Records CSV (default: stdout)");
  extract_cmd->add_option("--stoplist", stoplist, "Stopword file (default: $TRENDGRAM_STOPLIST or bundled)");
  extract_cmd->add_option("--nmax", config.nmax, "Longest n-gram")
      ->check(CLI::Range(1, ngram::kMaxLength))
      ->capture_default_str();

  auto* query_cmd = app.add_subcommand("query", "Evaluate a trend query");
  query_cmd->add_option("-i,--input", input, "Records CSV")->required();
  query_cmd->add_option("query", query_text, "e.g. \"case study, experiment, review+survey\"")->required();
  query_cmd->add_option("--from", from, "First year")->capture_default_str();
  query_cmd->add_option("--to", to, "Last year")->capture_default_str();
  query_cmd->add_option("-o,--output", output, "Series .csv or .json (default: CSV on stdout)");
  query_cmd->add_option("--svg", svg_path, "Also render the series as SVG");

  auto* top_cmd = app.add_subcommand("top", "Most frequent n-grams of one length");
  top_cmd->add_option("-i,--input", input, "Records CSV")->required();
  top_cmd->add_option("-n", n, "n-gram length")->check(CLI::Range(1, ngram::kMaxLength))->capture_default_str();
  auto* top_k = top_cmd->add_option("-k", k, "Rows")->check(CLI::PositiveNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "Plot the most frequent n-grams");
  catalog_cmd->add_option("-i,--input", input, "Records CSV")->required();
  catalog_cmd->add_option("-o,--output", output, "Output directory")->required();
  catalog_cmd->add_option("--limit", config.catalog_limit, "Number of plots")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  catalog_cmd->add_option("--from", from_opt, "First year (default: first year in records)");
  catalog_cmd->add_option("--to", to_opt, "Last year (default: last year in records)");

  auto* trends_cmd = app.add_subcommand("trends", "Rank rising or falling n-grams by slope");
  trends_cmd->add_option("-i,--input", input, "Records CSV")->required();
  trends_cmd->add_option("-n", n, "n-gram length")->check(CLI::Range(1, ngram::kMaxLength))->capture_default_str();
  trends_cmd->add_option("--direction", direction, "rising or falling")
      ->check(CLI::IsMember({"rising", "falling"}))
      ->capture_default_str();
  auto* trends_k = trends_cmd->add_option("-k", k, "Rows")->check(CLI::PositiveNumber);
  trends_cmd->add_option("--min-support", config.min_support, "Minimum total count")->capture_default_str();
  trends_cmd->add_option("--min-years", min_years, "Minimum years in which the n-gram occurs")
      ->capture_default_str();
  trends_cmd->add_option("--from", from_opt, "First year (default: first year in records)");
  trends_cmd->add_option("--to", to_opt, "Last year (default: last year in records)");

  auto* demo_cmd = app.add_subcommand("demo", "Render the five reference figure queries");
  demo_cmd->add_option("-i,--input", input, "Records CSV")->required();
  demo_cmd->add_option("-o,--output", output, "Output directory")->required();
  demo_cmd->add_option("--from", from, "First year")->capture_default_str();
  demo_cmd->add_option("--to", to, "Last year")->capture_default_str();

  try {
    Argv argv(args);
    app.parse(argv.argc(), argv.argv());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  try {
    if (*ingest_cmd) return do_ingest(ingest_args, config, out, err);
    if (*extract_cmd) {
      if (!stoplist.empty()) config.stoplist_path = stoplist;
      return do_extract(input, output, config, out);
    }
    if (*query_cmd) return do_query(input, query_text, checked_range(from, to), output, svg_path, out);
    if (*top_cmd) return do_top(input, n, top_k->count() ? k : 15, out);
    if (*trends_cmd) {
      rank_options.n = n;
      rank_options.direction =
          direction == "falling" ? trends::Direction::falling : trends::Direction::rising;
      rank_options.k = trends_k->count() ? k : 10;
      rank_options.min_support = config.min_support;
      rank_options.min_years = min_years;
      return do_trends(input, rank_options, from_opt, to_opt, out);
    }
    if (*catalog_cmd) {
      catalog_spec.limit = config.catalog_limit;
      return do_catalog(input, output, catalog_spec, from_opt, to_opt, err);
    }
    if (*demo_cmd) return do_demo(input, output, checked_range(from, to), err);
  } catch (const UsageError& e) {
    err << "trendgram: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "trendgram: " << e.what() << "\n";
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "trendgram: " << e.what() << "\n";
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace trendgram::cli
