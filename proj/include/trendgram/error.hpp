#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trendgram {

/// Input data could not be used (malformed machine-produced file, missing
/// column, unreadable path). The CLI maps this to exit status 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A trend query string was rejected by the parser.
class QueryError : public std::runtime_error {
 public:
  QueryError(const std::string& message, std::string fragment)
      : std::runtime_error(message), fragment_(std::move(fragment)) {}

  const std::string& fragment() const noexcept { return fragment_; }

 private:
  std::string fragment_;
};

/// Non-fatal, per-record problem reported by the tolerant parsers.
struct Diagnostic {
  std::size_t line = 0;  // 1-based; 0 when unknown
  std::string message;
};

}  // namespace trendgram
