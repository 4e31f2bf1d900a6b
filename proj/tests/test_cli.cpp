#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "trendgram/cli.hpp"
#include "trendgram/freq.hpp"
#include "trendgram/ingest.hpp"
#include "trendgram/ngram.hpp"

namespace fs = std::filesystem;
using trendgram::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string demo(const std::string& name) { return std::string(TRENDGRAM_DATA_DIR) + "/demo/" + name; }

std::string golden(const std::string& name) {
  return std::string(TRENDGRAM_FIXTURE_DIR) + "/golden/demo/" + name;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("trendgram-cli-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> ingest_args(const fs::path& corpus) {
  return {"ingest", "--bibtex", demo("scopus.bib"), "--csv", demo("ieee.csv"),
          "--endnote", demo("hcibib.enw"), "-o", corpus.string()};
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  auto none = call({});
  CHECK(none.code == 1);
  CHECK(none.err.find("Usage") != std::string::npos);

  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"top", "--bogus"}).code == 1);
  CHECK(call({"top"}).code == 1);  // missing -i
  CHECK(call({"trends", "-i", golden("records.csv"), "--direction", "sideways"}).code == 1);
  CHECK(call({"extract", "-i", golden("corpus.csv"), "--nmax", "5"}).code == 1);
}

TEST_CASE("help exits 0") {
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("extract") != std::string::npos);
}

TEST_CASE("bad query is a usage error") {
  auto r = call({"query", "-i", golden("records.csv"), "case study,,survey"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  CHECK(call({"query", "-i", golden("records.csv"), "one two three four five"}).code == 1);
}

TEST_CASE("missing or malformed files are data errors") {
  CHECK(call({"top", "-i", "/nonexistent/records.csv"}).code == 2);
  CHECK(call({"extract", "-i", "/nonexistent/corpus.csv"}).code == 2);

  fs::path dir = scratch("malformed");
  std::ofstream(dir / "bad.csv") << "n,ngram,year,count\n2,case study,20x0,3\n";
  auto r = call({"top", "-i", (dir / "bad.csv").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("ingest reports merge bookkeeping on stderr") {
  fs::path dir = scratch("ingest");
  auto r = call(ingest_args(dir / "corpus.csv"));
  REQUIRE(r.code == 0);
  CHECK(r.err.find("total_in: 30\n") != std::string::npos);
  CHECK(r.err.find("incomplete_removed: 2\n") != std::string::npos);
  CHECK(r.err.find("duplicates_removed: 3\n") != std::string::npos);
  CHECK(r.err.find("total_out: 25\n") != std::string::npos);
  CHECK(testing::read_text((dir / "corpus.csv").string()) == testing::read_text(golden("corpus.csv")));
}

TEST_CASE("ingest year filter") {
  fs::path dir = scratch("years");
  auto args = ingest_args(dir / "corpus.csv");
  args.insert(args.end(), {"--year-min", "2005", "--year-max", "2009"});
  auto r = call(args);
  REQUIRE(r.code == 0);
  CHECK(r.err.find("skipped 19 entries outside 2005-2009") != std::string::npos);
  CHECK(r.err.find("total_in: 11\n") != std::string::npos);
  auto corpus = trendgram::ingest::read_corpus(testing::read_text((dir / "corpus.csv").string()));
  for (const auto& e : corpus) CHECK((e.year >= 2005 && e.year <= 2009));
}

TEST_CASE("extract and demo match the independent oracle") {
  fs::path dir = scratch("golden");
  REQUIRE(call({"extract", "-i", golden("corpus.csv"), "-o", (dir / "records.csv").string()}).code == 0);
  CHECK(testing::read_text((dir / "records.csv").string()) == testing::read_text(golden("records.csv")));

  auto r = call({"demo", "-i", golden("records.csv"), "-o", (dir / "demo").string()});
  REQUIRE(r.code == 0);
  for (const auto& q : trendgram::cli::demo_queries()) {
    CAPTURE(q.name);
    CHECK(fs::exists(dir / "demo" / (q.name + ".svg")));
    CHECK(testing::read_text((dir / "demo" / (q.name + ".csv")).string()) ==
          testing::read_text(golden(q.name + ".csv")));
  }
}

TEST_CASE("CLI composition equals direct module calls") {
  const std::string corpus_text = testing::read_text(golden("corpus.csv"));
  auto entries = trendgram::ingest::read_corpus(corpus_text);
  std::vector<trendgram::textprep::Sentence> sentences;
  for (const auto& e : entries) {
    auto more = trendgram::textprep::entry_sentences(e);
    sentences.insert(sentences.end(), more.begin(), more.end());
  }
  auto records = trendgram::ngram::count_ngrams(sentences, trendgram::ngram::Stoplist::english(), 1, 4);
  auto table = trendgram::freq::build_table(records);
  auto series = trendgram::freq::evaluate(table, trendgram::freq::parse_query("open source, legacy"),
                                          {2000, 2014});

  auto r = call({"query", "-i", golden("records.csv"), "open source, legacy"});
  REQUIRE(r.code == 0);
  CHECK(r.out == trendgram::freq::write_series_csv(series));

  fs::path dir = scratch("json");
  REQUIRE(call({"query", "-i", golden("records.csv"), "open source, legacy", "-o",
                (dir / "s.json").string(), "--svg", (dir / "s.svg").string()})
              .code == 0);
  CHECK(testing::read_text((dir / "s.json").string()) == trendgram::freq::write_series_json(series));
  CHECK(fs::file_size(dir / "s.svg") > 0);
}

TEST_CASE("top prints ranked rows") {
  auto r = call({"top", "-i", golden("records.csv"), "-n", "2", "-k", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "1. feature location 36\n2. open source 27\n3. legacy systems 20\n");
}

TEST_CASE("trends ranks planted directions") {
  auto rising = call({"trends", "-i", golden("records.csv"), "--min-support", "5", "--min-years", "3", "-k", "2"});
  REQUIRE(rising.code == 0);
  std::istringstream lines(rising.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "rank,ngram,slope,total_count");
  CHECK(first.rfind("1,feature location,", 0) == 0);

  auto falling = call({"trends", "-i", golden("records.csv"), "--direction", "falling", "--min-support",
                       "5", "--min-years", "3", "-k", "2"});
  REQUIRE(falling.code == 0);
  CHECK(falling.out.find("1,legacy systems,") != std::string::npos);
  CHECK(falling.out.find("2,program slicing,") != std::string::npos);
}

TEST_CASE("catalog writes pages and an index") {
  fs::path dir = scratch("catalog");
  auto r = call({"catalog", "-i", golden("records.csv"), "-o", dir.string(), "--limit", "12"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "index.html"));
  CHECK(fs::exists(dir / "plot-0012.svg"));
  CHECK_FALSE(fs::exists(dir / "plot-0013.svg"));
}

TEST_CASE("stoplist resolution order") {
  fs::path dir = scratch("stoplist");
  std::ofstream(dir / "tiny.txt") << "of\nand\n";
  std::ofstream(dir / "bad.txt") << "# nothing\n";
  const std::string corpus = golden("corpus.csv");

  auto count_lines = [](const fs::path& p) {
    std::istringstream in(testing::read_text(p.string()));
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) ++n;
    return n;
  };

  REQUIRE(call({"extract", "-i", corpus, "-o", (dir / "bundled.csv").string()}).code == 0);
  REQUIRE(call({"extract", "-i", corpus, "--stoplist", (dir / "tiny.txt").string(), "-o",
                (dir / "flag.csv").string()})
              .code == 0);
  CHECK(count_lines(dir / "flag.csv") > count_lines(dir / "bundled.csv"));

  setenv("TRENDGRAM_STOPLIST", (dir / "tiny.txt").c_str(), 1);
  REQUIRE(call({"extract", "-i", corpus, "-o", (dir / "env.csv").string()}).code == 0);
  CHECK(testing::read_text((dir / "env.csv").string()) == testing::read_text((dir / "flag.csv").string()));

  // The flag wins over the environment.
  setenv("TRENDGRAM_STOPLIST", (dir / "bad.txt").c_str(), 1);
  CHECK(call({"extract", "-i", corpus, "-o", (dir / "x.csv").string()}).code == 2);
  REQUIRE(call({"extract", "-i", corpus, "--stoplist", (dir / "tiny.txt").string(), "-o",
                (dir / "flag2.csv").string()})
              .code == 0);
  CHECK(testing::read_text((dir / "flag2.csv").string()) == testing::read_text((dir / "flag.csv").string()));
  unsetenv("TRENDGRAM_STOPLIST");
}

TEST_CASE("binary entry point") {
  const std::string cmd = std::string(TRENDGRAM_BINARY) + " top -i " + golden("records.csv") + " -k 1 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string bad = std::string(TRENDGRAM_BINARY) + " top -i /nonexistent 2> /dev/null";
  int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
