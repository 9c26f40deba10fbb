#include "cli/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>

#include "cli/exit_codes.hpp"
#include "ktau/error.hpp"

namespace ktau::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::string quoted_list(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += "'" + n + "'";
  }
  return out;
}

// validate_sample, with errors restated in terms of columns and source lines.
PairedSample validate_columns(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<std::size_t>& lines, const std::string& x_name,
                              const std::string& y_name, std::size_t dropped) {
  try {
    return validate_sample(x, y);
  } catch (const NonFiniteError& e) {
    throw Error(Errc::non_finite, "non-finite value at line " + std::to_string(lines[e.index()]) +
                                      ", column '" + (e.which() == Variable::x ? x_name : y_name) +
                                      "'");
  } catch (const Error& e) {
    if (e.code() != Errc::too_short) throw;
    std::string msg = "need at least 2 complete rows, got " + std::to_string(x.size());
    if (dropped > 0) msg += " after dropping " + std::to_string(dropped);
    throw Error(Errc::too_short, msg);
  }
}

}  // namespace

std::string Table::column_name(std::size_t index) const {
  if (index < header.size()) return header[index];
  return "column " + std::to_string(index + 1);
}

Table parse_table(std::istream& in, char delimiter, bool has_header) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);

  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> record_lines;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;
  std::size_t record_line = 1;
  std::size_t quote_line = 0;

  auto end_field = [&] {
    record.push_back(field);
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    const bool blank = record.empty() && trim(field).empty() && !field_was_quoted;
    end_field();
    if (!blank) {
      records.push_back(std::move(record));
      record_lines.push_back(record_line);
    }
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && trim(field).empty()) {
      field.clear();
      in_quotes = true;
      field_was_quoted = true;
      quote_line = line;
    } else if (c == delimiter) {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_record();
      ++line;
      record_line = line;
    } else {
      field += c;
    }
  }
  if (in_quotes) {
    throw CliError(ExitCode::io, "unterminated quoted field starting on line " +
                                     std::to_string(quote_line));
  }
  if (!field.empty() || !record.empty()) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    end_record();
  }

  Table table;
  std::size_t first_data = 0;
  if (has_header && !records.empty()) {
    for (auto& name : records[0]) table.header.emplace_back(trim(name));
    first_data = 1;
  }
  for (std::size_t r = first_data; r < records.size(); ++r) {
    table.rows.push_back(std::move(records[r]));
    table.lines.push_back(record_lines[r]);
  }
  table.columns = table.header.size();
  for (const auto& row : table.rows) table.columns = std::max(table.columns, row.size());
  return table;
}

Table read_table(const std::string& source, std::istream& stdin_stream, char delimiter,
                 bool has_header) {
  if (source == kStdinMarker) return parse_table(stdin_stream, delimiter, has_header);
  std::ifstream file(source, std::ios::binary);
  if (!file) throw CliError(ExitCode::io, "cannot open input file '" + source + "'");
  return parse_table(file, delimiter, has_header);
}

std::size_t resolve_column(const Table& table, const std::string& selector) {
  const auto named = std::find(table.header.begin(), table.header.end(), selector);
  if (named != table.header.end()) return static_cast<std::size_t>(named - table.header.begin());
  if (all_digits(selector)) {
    std::size_t index = 0;
    const auto res = std::from_chars(selector.data(), selector.data() + selector.size(), index);
    if (res.ec == std::errc() && index >= 1 && index <= table.columns) return index - 1;
  }
  std::string msg = "column '" + selector + "' not found";
  if (!table.header.empty()) {
    msg += "; available columns: " + quoted_list(table.header);
  } else {
    msg += "; input has " + std::to_string(table.columns) + " columns (select by 1-based index)";
  }
  throw CliError(ExitCode::io, msg);
}

Cell parse_cell(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "NA") return {CellKind::missing, 0.0};
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    return {CellKind::invalid, 0.0};
  }
  if (std::isnan(value)) return {CellKind::missing, 0.0};
  return {CellKind::value, value};
}

LoadedSample load_columns(const ColumnSpec& spec, bool drop_missing, std::istream& stdin_stream,
                          std::ostream& diagnostics) {
  const Table table = read_table(spec.source, stdin_stream, spec.delimiter, spec.has_header);
  return load_columns(table, spec, drop_missing, diagnostics);
}

LoadedSample load_columns(const Table& table, const ColumnSpec& spec, bool drop_missing,
                          std::ostream& diagnostics) {
  const std::size_t xi = resolve_column(table, spec.x_selector);
  const std::size_t yi = resolve_column(table, spec.y_selector);
  if (xi == yi) {
    throw CliError(ExitCode::usage, "x and y select the same column ('" +
                                        table.column_name(xi) + "')");
  }

  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::size_t> lines;
  std::size_t dropped = 0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const Cell cx = xi < row.size() ? parse_cell(row[xi]) : Cell{};
    const Cell cy = yi < row.size() ? parse_cell(row[yi]) : Cell{};
    if (cx.kind == CellKind::value && cy.kind == CellKind::value) {
      x.push_back(cx.value);
      y.push_back(cy.value);
      lines.push_back(table.lines[r]);
      continue;
    }
    if (drop_missing) {
      ++dropped;
      continue;
    }
    const std::size_t bad = cx.kind != CellKind::value ? xi : yi;
    const Cell& cell = cx.kind != CellKind::value ? cx : cy;
    const std::string text = bad < row.size() ? std::string(trim(row[bad])) : std::string();
    throw CliError(ExitCode::io,
                   std::string(cell.kind == CellKind::missing ? "missing value" : "cannot parse '" + text + "'") +
                       " at line " + std::to_string(table.lines[r]) + ", column '" +
                       table.column_name(bad) + "' (use --drop-missing to skip such rows)");
  }
  if (drop_missing && dropped > 0) {
    diagnostics << "dropped " << dropped << " row" << (dropped == 1 ? "" : "s")
                << " with missing or unparseable values\n";
  }

  const std::string x_name = table.column_name(xi);
  const std::string y_name = table.column_name(yi);
  PairedSample sample = validate_columns(x, y, lines, x_name, y_name, dropped);
  return LoadedSample{std::move(sample), x_name, y_name, std::move(lines), dropped};
}

}  // namespace ktau::cli
