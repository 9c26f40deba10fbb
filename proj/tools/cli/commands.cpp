#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <thread>

#include "cli/exit_codes.hpp"
#include "ktau/error.hpp"
#include "ktau/oracle.hpp"
#include "ktau/tau.hpp"

namespace ktau::cli {

namespace {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return to_int(exit_code_for(e));
  }
}

[[noreturn]] void rethrow_degenerate(const DegenerateError& e, const LoadedSample& loaded) {
  if (!e.which()) throw e;
  const std::string& name = *e.which() == Variable::x ? loaded.x_name : loaded.y_name;
  throw CliError(ExitCode::degenerate,
                 "degenerate input: all values of column '" + name + "' are equal");
}

void require_format(Format f, std::initializer_list<Format> allowed, std::string_view command) {
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw CliError(ExitCode::usage, "unsupported --format for " + std::string(command));
  }
}

void emit(const OutputRecord& record, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << to_json(record).dump() << '\n';
  } else {
    out << render_text(record);
  }
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) noexcept {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  return std::nullopt;
}

std::optional<Method> parse_method_flag(std::string_view text) noexcept {
  if (text == "auto") return Method::automatic;
  if (text == "exact") return Method::exact;
  if (text == "normal") return Method::normal_approx;
  return std::nullopt;
}

std::optional<char> parse_delimiter(std::string_view text) noexcept {
  if (text == "\\t" || text == "tab") return '\t';
  if (text.size() != 1 || text[0] == '"' || text[0] == '\n' || text[0] == '\r') return std::nullopt;
  return text[0];
}

int run_cor(const CorOptions& options, Streams io) {
  return guarded(io.err, [&] {
    require_format(options.format, {Format::text, Format::json}, "cor");
    const LoadedSample loaded = load_columns(options.columns, options.drop_missing, io.in, io.err);

    OutputRecord record;
    record.n = static_cast<std::int64_t>(loaded.sample.size());
    try {
      const auto start = std::chrono::steady_clock::now();
      record.tau = kendall_tau(loaded.sample).tau;
      const auto stop = std::chrono::steady_clock::now();
      if (options.timing) {
        record.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
      }
    } catch (const DegenerateError& e) {
      rethrow_degenerate(e, loaded);
    }

    if (options.check_oracle) {
      if (loaded.sample.size() > kOracleCheckLimit) {
        throw CliError(ExitCode::usage, "--check-oracle is limited to n <= " +
                                            std::to_string(kOracleCheckLimit));
      }
      const double reference = oracle::brute_force_tau(loaded.sample);
      if (!(std::abs(reference - record.tau) <= kOracleTolerance)) {
        throw CliError(ExitCode::internal, "oracle mismatch: fast tau " +
                                               format_shortest(record.tau) + ", brute force " +
                                               format_shortest(reference));
      }
    }
    emit(record, options.format, io.out);
    return to_int(ExitCode::ok);
  });
}

int run_test(const TestCommandOptions& options, Streams io) {
  return guarded(io.err, [&] {
    require_format(options.format, {Format::text, Format::json}, "test");
    const LoadedSample loaded = load_columns(options.columns, options.drop_missing, io.in, io.err);
    TestResult result;
    try {
      result = kendall_test(loaded.sample, options.test);
    } catch (const DegenerateError& e) {
      rethrow_degenerate(e, loaded);
    } catch (const Error& e) {
      if (e.code() != Errc::exact_not_applicable) throw;
      throw CliError(ExitCode::not_applicable, std::string(e.what()) + " (try --method normal)");
    }
    emit(record_from(result), options.format, io.out);
    return to_int(ExitCode::ok);
  });
}

TauMatrix compute_matrix(const Table& table, const MatrixOptions& options, std::ostream& warnings) {
  std::vector<std::size_t> selected;
  if (!options.columns.empty()) {
    for (const auto& sel : options.columns) {
      const std::size_t idx = resolve_column(table, sel);
      if (std::find(selected.begin(), selected.end(), idx) != selected.end()) {
        throw CliError(ExitCode::usage, "column '" + table.column_name(idx) + "' selected twice");
      }
      selected.push_back(idx);
    }
    if (selected.size() < 2) throw CliError(ExitCode::usage, "matrix needs at least 2 columns");
  } else {
    for (std::size_t c = 0; c < table.columns; ++c) {
      std::size_t values = 0;
      bool numeric = true;
      for (const auto& row : table.rows) {
        const Cell cell = c < row.size() ? parse_cell(row[c]) : Cell{};
        if (cell.kind == CellKind::invalid) {
          numeric = false;
          break;
        }
        values += cell.kind == CellKind::value ? 1 : 0;
      }
      if (numeric && values >= 2) selected.push_back(c);
    }
    if (selected.size() < 2) {
      throw Error(Errc::too_short, "matrix needs at least 2 numeric columns, found " +
                                       std::to_string(selected.size()));
    }
  }

  const std::size_t k = selected.size();
  std::vector<std::vector<Cell>> cells(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t c = selected[i];
    cells[i].reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const auto& row = table.rows[r];
      const Cell cell = c < row.size() ? parse_cell(row[c]) : Cell{};
      if (cell.kind != CellKind::value && !options.drop_missing) {
        throw CliError(ExitCode::io,
                       std::string(cell.kind == CellKind::missing ? "missing value" : "unparseable value") +
                           " at line " + std::to_string(table.lines[r]) + ", column '" +
                           table.column_name(c) + "' (use --drop-missing to skip such rows)");
      }
      cells[i].push_back(cell);
    }
  }

  TauMatrix m;
  for (const std::size_t c : selected) m.columns.push_back(table.column_name(c));
  m.tau.assign(k, std::vector<std::optional<double>>(k));
  for (std::size_t i = 0; i < k; ++i) m.tau[i][i] = 1.0;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::vector<std::string> problems(pairs.size());

  // Workers claim pairs through a shared counter; each writes only its own cells.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::vector<double> x;
    std::vector<double> y;
    for (std::size_t p = next++; p < pairs.size(); p = next++) {
      const auto [i, j] = pairs[p];
      x.clear();
      y.clear();
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (cells[i][r].kind == CellKind::value && cells[j][r].kind == CellKind::value) {
          x.push_back(cells[i][r].value);
          y.push_back(cells[j][r].value);
        }
      }
      try {
        const double tau = kendall_tau(validate_sample(x, y)).tau;
        m.tau[i][j] = tau;
        m.tau[j][i] = tau;
      } catch (const DegenerateError& e) {
        const std::size_t constant = e.which() == Variable::y ? j : i;
        problems[p] = "all values of column '" + m.columns[constant] + "' are equal";
      } catch (const Error& e) {
        problems[p] = e.what();
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(pairs.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (problems[p].empty()) continue;
    warnings << "warning: tau(" << m.columns[pairs[p].first] << ", " << m.columns[pairs[p].second]
             << ") is undefined: " << problems[p] << '\n';
  }
  return m;
}

int run_matrix(const MatrixOptions& options, Streams io) {
  return guarded(io.err, [&] {
    const Table table = read_table(options.source, io.in, options.delimiter, options.has_header);
    const TauMatrix m = compute_matrix(table, options, io.err);
    switch (options.format) {
      case Format::csv: write_matrix_csv(io.out, m); break;
      case Format::json: io.out << to_json(m).dump() << '\n'; break;
      case Format::text: write_matrix_text(io.out, m); break;
    }
    return to_int(ExitCode::ok);
  });
}

int run_bench(const BenchOptions& options, Streams io) {
  return guarded(io.err, [&] {
    std::ofstream file;
    if (!options.output.empty()) {
      file.open(options.output);
      if (!file) throw CliError(ExitCode::io, "cannot open output file '" + options.output + "'");
    }
    const bench::BenchReport report =
        bench::scaling_report(options.sizes, options.reps, options.seed, options.naive_cutoff);
    std::ostream& out = options.output.empty() ? io.out : file;
    switch (options.format) {
      case Format::csv: bench::write_csv(out, report); break;
      case Format::json: out << to_json(report).dump(2) << '\n'; break;
      case Format::text: write_bench_text(out, report); break;
    }
    return to_int(ExitCode::ok);
  });
}

}  // namespace ktau::cli
