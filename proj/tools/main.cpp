#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/exit_codes.hpp"

using namespace ktau::cli;

namespace {

// Flags that cor, test and matrix share for reading the input.
struct InputFlags {
  std::string input = kStdinMarker;
  std::string delimiter = ",";
  bool no_header = false;
  bool drop_missing = false;
  std::string format;
};

void add_input_flags(CLI::App& cmd, InputFlags& flags) {
  cmd.add_option("--input,-i", flags.input, "Delimited text file, or - for standard input")
      ->capture_default_str();
  cmd.add_option("--delimiter,-d", flags.delimiter, "Field delimiter (one byte, or \\t)")
      ->capture_default_str();
  cmd.add_flag("--no-header", flags.no_header, "First row is data; select columns by 1-based index");
  cmd.add_flag("--drop-missing", flags.drop_missing,
               "Drop rows with missing or unparseable cells instead of failing");
}

ColumnSpec column_spec(const InputFlags& flags, const std::string& x, const std::string& y) {
  ColumnSpec spec;
  spec.source = flags.input;
  spec.x_selector = x;
  spec.y_selector = y;
  spec.has_header = !flags.no_header;
  const auto delim = parse_delimiter(flags.delimiter);
  if (!delim) throw CliError(ExitCode::usage, "--delimiter must be a single byte");
  spec.delimiter = *delim;
  return spec;
}

Format format_or(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  const auto f = parse_format(text);
  if (!f) throw CliError(ExitCode::usage, "unknown --format '" + text + "'");
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kendall's tau-b rank correlation in O(n log n), with significance tests"};
  app.footer(exit_code_help());
  app.require_subcommand(1);

  InputFlags cor_in;
  std::string cor_x, cor_y;
  bool check_oracle = false;
  bool timing = false;
  auto* cor = app.add_subcommand("cor", "Kendall's tau-b of two columns");
  add_input_flags(*cor, cor_in);
  cor->add_option("--x", cor_x, "First column (name or 1-based index)")->required();
  cor->add_option("--y", cor_y, "Second column (name or 1-based index)")->required();
  cor->add_option("--format,-f", cor_in.format, "text (7 significant digits) or json");
  cor->add_flag("--time", timing, "Report the elapsed computation time");
  // Cross-checks against the quadratic reference implementation; not in --help.
  cor->add_flag("--check-oracle", check_oracle)->group("");

  InputFlags test_in;
  std::string test_x, test_y;
  std::string alternative = "two-sided";
  std::string method = "auto";
  bool continuity = false;
  auto* test = app.add_subcommand("test", "Significance test of Kendall's tau");
  add_input_flags(*test, test_in);
  test->add_option("--x", test_x, "First column (name or 1-based index)")->required();
  test->add_option("--y", test_y, "Second column (name or 1-based index)")->required();
  test->add_option("--alternative,-a", alternative, "two-sided, less or greater")
      ->capture_default_str();
  test->add_option("--method,-m", method,
                   "auto (exact when n < 50 without ties), exact or normal")
      ->capture_default_str();
  test->add_flag("--continuity", continuity, "Continuity correction for the normal approximation");
  test->add_option("--format,-f", test_in.format, "text or json");

  InputFlags matrix_in;
  std::vector<std::string> columns;
  unsigned threads = 0;
  auto* matrix = app.add_subcommand("matrix", "Pairwise tau matrix over many columns");
  add_input_flags(*matrix, matrix_in);
  matrix->add_option("--columns,-c", columns, "Columns to include (default: every numeric column)")
      ->delimiter(',');
  matrix->add_option("--format,-f", matrix_in.format, "csv (default), json or text");
  matrix->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

  BenchOptions bench_opts;
  std::string bench_format;
  auto* bench = app.add_subcommand("bench", "Median runtimes and log-log scaling slope");
  bench->add_option("--sizes", bench_opts.sizes, "Sample sizes (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--reps", bench_opts.reps, "Timed repetitions per size (>= 3)")
      ->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "Seed of the sample generator")->capture_default_str();
  bench->add_option("--naive-cutoff", bench_opts.naive_cutoff,
                    "Largest n timed with the quadratic reference")
      ->capture_default_str();
  bench->add_option("--format,-f", bench_format, "csv (default), json or text");
  bench->add_option("--output,-o", bench_opts.output, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return to_int(ExitCode::usage);
  }

  Streams io{std::cin, std::cout, std::cerr};
  try {
    if (*cor) {
      CorOptions o;
      o.columns = column_spec(cor_in, cor_x, cor_y);
      o.drop_missing = cor_in.drop_missing;
      o.format = format_or(cor_in.format, Format::text);
      o.check_oracle = check_oracle;
      o.timing = timing;
      return run_cor(o, io);
    }
    if (*test) {
      TestCommandOptions o;
      o.columns = column_spec(test_in, test_x, test_y);
      o.drop_missing = test_in.drop_missing;
      o.format = format_or(test_in.format, Format::text);
      const auto alt = ktau::parse_alternative(alternative);
      if (!alt) throw CliError(ExitCode::usage, "unknown --alternative '" + alternative + "'");
      const auto m = parse_method_flag(method);
      if (!m) throw CliError(ExitCode::usage, "unknown --method '" + method + "'");
      o.test = ktau::TestOptions{*alt, *m, continuity};
      return run_test(o, io);
    }
    if (*matrix) {
      MatrixOptions o;
      const ColumnSpec spec = column_spec(matrix_in, "", "");
      o.source = spec.source;
      o.delimiter = spec.delimiter;
      o.has_header = spec.has_header;
      o.columns = columns;
      o.drop_missing = matrix_in.drop_missing;
      o.format = format_or(matrix_in.format, Format::csv);
      o.threads = threads;
      return run_matrix(o, io);
    }
    if (*bench) {
      bench_opts.format = format_or(bench_format, Format::csv);
      return run_bench(bench_opts, io);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return to_int(e.code());
  }
  return to_int(ExitCode::usage);
}
