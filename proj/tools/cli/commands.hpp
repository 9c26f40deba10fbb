#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/output.hpp"
#include "cli/table.hpp"
#include "ktau/bench.hpp"
#include "ktau/inference.hpp"

namespace ktau::cli {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

enum class Format { text, json, csv };

std::optional<Format> parse_format(std::string_view text) noexcept;

/// "auto" | "exact" | "normal".
std::optional<Method> parse_method_flag(std::string_view text) noexcept;

/// Single byte, or the escapes "\t" and "tab".
std::optional<char> parse_delimiter(std::string_view text) noexcept;

inline constexpr std::size_t kOracleCheckLimit = 5000;
inline constexpr double kOracleTolerance = 1e-12;

struct CorOptions {
  ColumnSpec columns;
  bool drop_missing = false;
  Format format = Format::text;
  bool check_oracle = false;
  bool timing = false;
};

struct TestCommandOptions {
  ColumnSpec columns;
  bool drop_missing = false;
  Format format = Format::text;
  TestOptions test;
};

struct MatrixOptions {
  std::string source = kStdinMarker;
  std::vector<std::string> columns;  ///< empty selects every numeric column
  char delimiter = ',';
  bool has_header = true;
  bool drop_missing = false;  ///< pairwise-complete rows per cell
  Format format = Format::csv;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

struct BenchOptions {
  std::vector<std::int64_t> sizes{10000, 20000, 50000, 100000};
  int reps = 5;
  std::uint64_t seed = 1;
  std::int64_t naive_cutoff = bench::kDefaultNaiveCutoff;
  Format format = Format::csv;
  std::string output;  ///< empty writes to standard output
};

// Each command returns its process exit code. Failures print one
// "error: ..." line to the error stream and nothing to the output stream.
int run_cor(const CorOptions& options, Streams io);
int run_test(const TestCommandOptions& options, Streams io);
int run_matrix(const MatrixOptions& options, Streams io);
int run_bench(const BenchOptions& options, Streams io);

/// Pairwise tau over the selected columns, cells computed on worker threads.
/// Undefined cells are nullopt and produce one warning line each.
TauMatrix compute_matrix(const Table& table, const MatrixOptions& options, std::ostream& warnings);

}  // namespace ktau::cli
