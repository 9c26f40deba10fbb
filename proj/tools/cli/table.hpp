#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ktau/sample.hpp"

namespace ktau::cli {

inline constexpr const char* kStdinMarker = "-";

/// Where two columns come from and how the source is laid out.
struct ColumnSpec {
  std::string source = kStdinMarker;
  std::string x_selector;
  std::string y_selector;
  char delimiter = ',';
  bool has_header = true;
};

/// RFC 4180 delimited text. Rows keep the 1-based source line they start on.
struct Table {
  std::vector<std::string> header;  ///< empty when the source has no header row
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;
  std::size_t columns = 0;

  /// Header name, or "column N" (1-based) without a header.
  std::string column_name(std::size_t index) const;
};

/// Throws CliError(io) on an unterminated quoted field. Blank lines are skipped
/// and a leading UTF-8 byte-order mark is ignored.
Table parse_table(std::istream& in, char delimiter, bool has_header);

/// Opens `source` ("-" reads `stdin_stream`) and parses it.
Table read_table(const std::string& source, std::istream& stdin_stream, char delimiter,
                 bool has_header);

/// Column index for a header name or a 1-based position. Names win over
/// positions when both match. Throws CliError(io) listing the available names.
std::size_t resolve_column(const Table& table, const std::string& selector);

enum class CellKind { value, missing, invalid };

struct Cell {
  CellKind kind = CellKind::missing;
  double value = 0.0;
};

/// Empty, "NA" and NaN cells are missing; text that is not entirely a decimal
/// number is invalid. "inf" parses to a value (validation rejects it later).
Cell parse_cell(std::string_view text);

struct LoadedSample {
  PairedSample sample;
  std::string x_name;
  std::string y_name;
  std::vector<std::size_t> lines;  ///< source line of each kept pair
  std::size_t dropped = 0;
};

/// Reads the two selected columns. Without `drop_missing` any missing or
/// invalid cell is a CliError(io) naming its line and column; with it, such
/// rows are removed and the count is written to `diagnostics`.
/// Validation errors are rethrown with column names and line numbers.
LoadedSample load_columns(const ColumnSpec& spec, bool drop_missing, std::istream& stdin_stream,
                          std::ostream& diagnostics);

/// Same, from an already-parsed table.
LoadedSample load_columns(const Table& table, const ColumnSpec& spec, bool drop_missing,
                          std::ostream& diagnostics);

}  // namespace ktau::cli
