#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ktau/bench.hpp"
#include "ktau/inference.hpp"

namespace ktau::cli {

/// What `cor` and `test` report. Optional fields are present exactly when
/// the command computed them.
struct OutputRecord {
  double tau = 0.0;
  std::int64_t n = 0;
  std::optional<double> p_value;
  std::optional<Alternative> alternative;
  std::optional<TestMethod> method;
  std::optional<std::int64_t> elapsed_ns;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord record_from(const TestResult& result);

/// Seven significant digits, trailing zeros dropped: 0.1288889, 1, -0.5.
std::string format_sig7(double v);

/// Shortest text that parses back to the same double.
std::string format_shortest(double v);

/// Text mode. A record with a p-value prints the $statistic / $p_value /
/// $alternative blocks; otherwise only tau.
std::string render_text(const OutputRecord& record);

nlohmann::json to_json(const OutputRecord& record);

/// Inverse of to_json. Throws nlohmann::json::exception on a malformed object.
OutputRecord record_from_json(const nlohmann::json& j);

struct TauMatrix {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> tau;  ///< nullopt where undefined
};

void write_matrix_csv(std::ostream& out, const TauMatrix& m);
void write_matrix_text(std::ostream& out, const TauMatrix& m);
nlohmann::json to_json(const TauMatrix& m);

nlohmann::json to_json(const bench::BenchReport& report);
void write_bench_text(std::ostream& out, const bench::BenchReport& report);

}  // namespace ktau::cli
