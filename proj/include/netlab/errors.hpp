#pragma once

#include <stdexcept>
#include <string>

namespace netlab {

// Bad input data or bad arguments. CLI maps this family to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem / stream trouble. CLI maps this family to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Row-level CSV problem; keeps the 1-based line number.
struct CsvError : ValidationError {
  CsvError(std::size_t line_no, const std::string& what)
      : ValidationError("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  std::size_t line;
};

// Two series share fewer than two observation years.
struct InsufficientOverlapError : ValidationError {
  explicit InsufficientOverlapError(std::size_t common)
      : ValidationError("series overlap on only " + std::to_string(common) +
                        " common year(s); need at least 2"),
        common_years(common) {}
  std::size_t common_years;
};

}  // namespace netlab
