#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trendgram::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Defaults shared by the subcommands.
struct Config {
  int year_min = 2000;
  int year_max = 2014;
  int nmax = 4;
  std::optional<std::string> stoplist_path;  // falls back to $TRENDGRAM_STOPLIST
  std::uint64_t min_support = 30;
  std::size_t catalog_limit = 800;
};

/// A query from the built-in demo set, one per reference figure.
struct DemoQuery {
  std::string name;   // output file stem
  std::string title;  // plot title
  std::string query;
};

const std::vector<DemoQuery>& demo_queries();

/// Runs `trendgram <subcommand> ...`. args excludes the program name.
/// Data goes to `out` (or -o files), diagnostics to `err`.
/// Returns 0 on success, 1 on usage errors, 2 on data errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trendgram::cli
