#include "cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ktau::cli {

namespace {

std::optional<TestMethod> parse_method(const std::string& s) {
  if (s == "exact") return TestMethod::exact;
  if (s == "normal_approx") return TestMethod::normal_approx;
  return std::nullopt;
}

}  // namespace

OutputRecord record_from(const TestResult& result) {
  OutputRecord r;
  r.tau = result.statistic;
  r.n = result.n;
  r.p_value = result.p_value;
  r.alternative = result.alternative;
  r.method = result.method;
  return r;
}

std::string format_sig7(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.7g", v);
  return buf;
}

std::string format_shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string render_text(const OutputRecord& record) {
  std::string out;
  if (record.p_value) {
    out += "$statistic\n[1] " + format_sig7(record.tau) + "\n\n";
    out += "$p_value\n[1] " + format_sig7(*record.p_value) + "\n\n";
    out += "$alternative\n[1] \"" +
           alternative_sentence(record.alternative.value_or(Alternative::two_sided)) + "\"\n";
  } else {
    out += format_sig7(record.tau) + "\n";
  }
  if (record.elapsed_ns) out += "elapsed: " + std::to_string(*record.elapsed_ns) + " ns\n";
  return out;
}

nlohmann::json to_json(const OutputRecord& record) {
  nlohmann::json j;
  j["tau"] = record.tau;
  j["n"] = record.n;
  if (record.p_value) {
    j["statistic"] = record.tau;
    j["p_value"] = *record.p_value;
  }
  if (record.alternative) {
    j["alternative"] = std::string(to_string(*record.alternative));
    j["alternative_text"] = alternative_sentence(*record.alternative);
  }
  if (record.method) j["method"] = std::string(to_string(*record.method));
  if (record.elapsed_ns) j["elapsed_ns"] = *record.elapsed_ns;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.tau = j.at("tau").get<double>();
  r.n = j.at("n").get<std::int64_t>();
  if (j.contains("p_value")) r.p_value = j.at("p_value").get<double>();
  if (j.contains("alternative")) {
    r.alternative = parse_alternative(j.at("alternative").get<std::string>());
    if (!r.alternative) throw std::invalid_argument("unknown alternative in JSON record");
  }
  if (j.contains("method")) {
    r.method = parse_method(j.at("method").get<std::string>());
    if (!r.method) throw std::invalid_argument("unknown method in JSON record");
  }
  if (j.contains("elapsed_ns")) r.elapsed_ns = j.at("elapsed_ns").get<std::int64_t>();
  return r;
}

void write_matrix_csv(std::ostream& out, const TauMatrix& m) {
  for (const auto& name : m.columns) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < m.columns.size(); ++i) {
    out << m.columns[i];
    for (const auto& cell : m.tau[i]) out << ',' << (cell ? format_shortest(*cell) : "NA");
    out << '\n';
  }
}

void write_matrix_text(std::ostream& out, const TauMatrix& m) {
  std::size_t width = 10;
  for (const auto& name : m.columns) width = std::max(width, name.size() + 1);
  const auto w = static_cast<int>(width);
  out << std::setw(w) << "";
  for (const auto& name : m.columns) out << std::setw(w) << name;
  out << '\n';
  for (std::size_t i = 0; i < m.columns.size(); ++i) {
    out << std::left << std::setw(w) << m.columns[i] << std::right;
    for (const auto& cell : m.tau[i]) out << std::setw(w) << (cell ? format_sig7(*cell) : "NA");
    out << '\n';
  }
}

nlohmann::json to_json(const TauMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.tau) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell ? nlohmann::json(*cell) : nlohmann::json(nullptr));
    rows.push_back(std::move(r));
  }
  return {{"columns", m.columns}, {"tau", std::move(rows)}};
}

nlohmann::json to_json(const bench::BenchReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"n", e.n},
                       {"fast_median_s", e.fast_median_seconds},
                       {"naive_median_s", e.naive_median_seconds
                                              ? nlohmann::json(*e.naive_median_seconds)
                                              : nlohmann::json(nullptr)},
                       {"reps", e.reps}});
  }
  nlohmann::json j{{"seed", report.seed},
                   {"entries", std::move(entries)},
                   {"fitted_loglog_slope_fast", report.fitted_loglog_slope_fast}};
  j["fitted_loglog_slope_naive"] = report.fitted_loglog_slope_naive
                                       ? nlohmann::json(*report.fitted_loglog_slope_naive)
                                       : nlohmann::json(nullptr);
  return j;
}

void write_bench_text(std::ostream& out, const bench::BenchReport& report) {
  out << std::setw(10) << "n" << std::setw(16) << "fast median s" << std::setw(16)
      << "naive median s" << std::setw(8) << "reps" << '\n';
  for (const auto& e : report.entries) {
    out << std::setw(10) << e.n << std::setw(16) << format_sig7(e.fast_median_seconds)
        << std::setw(16) << (e.naive_median_seconds ? format_sig7(*e.naive_median_seconds) : "-")
        << std::setw(8) << e.reps << '\n';
  }
  out << "log-log slope (fast): " << format_sig7(report.fitted_loglog_slope_fast) << '\n';
  if (report.fitted_loglog_slope_naive) {
    out << "log-log slope (naive): " << format_sig7(*report.fitted_loglog_slope_naive) << '\n';
  }
  out << "seed: " << report.seed << '\n';
}

}  // namespace ktau::cli
