#include "ktau/bench.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ktau/error.hpp"
#include "ktau/oracle.hpp"
#include "ktau/random.hpp"
#include "ktau/tau.hpp"

namespace ktau::bench {

namespace {

double run_once(const PairedSample& sample, Implementation which) {
  return which == Implementation::fast ? kendall_tau(sample).tau
                                       : oracle::brute_force_tau(sample);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

PairedSample generate_random_sample(std::int64_t n, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::too_short, "sample size must be >= 2");
  const auto count = static_cast<std::size_t>(n);
  const std::vector<double> draws = standard_normal_draws(seed, 2 * count);
  const std::span<const double> all(draws);
  return validate_sample(all.first(count), all.subspan(count));
}

double time_tau(const PairedSample& sample, int reps, Implementation which,
                std::int64_t naive_cutoff) {
  if (reps < kMinReps) throw std::invalid_argument("reps must be >= 3");
  if (which == Implementation::naive && static_cast<std::int64_t>(sample.size()) > naive_cutoff) {
    throw Error(Errc::cutoff_exceeded, "naive timing limited to n <= " +
                                           std::to_string(naive_cutoff) + ", got " +
                                           std::to_string(sample.size()));
  }
  using clock = std::chrono::steady_clock;

  const double reference = run_once(sample, which);
  std::vector<double> seconds;
  seconds.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const auto start = clock::now();
    const double tau = run_once(sample, which);
    const auto stop = clock::now();
    if (tau != reference) throw std::logic_error("tau changed between benchmark repetitions");
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }
  return median(std::move(seconds));
}

double loglog_slope(std::span<const double> n, std::span<const double> seconds) {
  if (n.size() != seconds.size() || n.size() < 2) {
    throw std::invalid_argument("loglog_slope needs two or more matching points");
  }
  const auto count = static_cast<double>(n.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    mean_x += std::log(n[i]);
    mean_y += std::log(seconds[i]);
  }
  mean_x /= count;
  mean_y /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double dx = std::log(n[i]) - mean_x;
    sxy += dx * (std::log(seconds[i]) - mean_y);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw std::invalid_argument("loglog_slope needs distinct sizes");
  return sxy / sxx;
}

BenchReport scaling_report(std::span<const std::int64_t> sizes, int reps, std::uint64_t seed,
                           std::int64_t naive_cutoff) {
  std::vector<std::int64_t> grid(sizes.begin(), sizes.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.size() < 3 || grid.front() < 2 || grid.back() < 10 * grid.front()) {
    throw Error(Errc::insufficient_sizes,
                "need at least 3 distinct sizes (each >= 2) spanning a factor of 10");
  }
  if (reps < kMinReps) throw std::invalid_argument("reps must be >= 3");

  BenchReport report;
  report.seed = seed;
  std::vector<double> fast_n, fast_t, naive_n, naive_t;
  for (const std::int64_t n : grid) {
    const PairedSample sample = generate_random_sample(n, seed);
    BenchEntry e;
    e.n = n;
    e.reps = reps;
    e.fast_median_seconds = time_tau(sample, reps, Implementation::fast, naive_cutoff);
    fast_n.push_back(static_cast<double>(n));
    fast_t.push_back(e.fast_median_seconds);
    if (n <= naive_cutoff) {
      e.naive_median_seconds = time_tau(sample, reps, Implementation::naive, naive_cutoff);
      naive_n.push_back(static_cast<double>(n));
      naive_t.push_back(*e.naive_median_seconds);
    }
    report.entries.push_back(e);
  }
  report.fitted_loglog_slope_fast = loglog_slope(fast_n, fast_t);
  if (naive_n.size() >= 2) report.fitted_loglog_slope_naive = loglog_slope(naive_n, naive_t);
  return report;
}

void write_csv(std::ostream& out, const BenchReport& report) {
  out << "n,fast_median_s,naive_median_s,reps\n";
  for (const BenchEntry& e : report.entries) {
    out << e.n << ',' << shortest(e.fast_median_seconds) << ',';
    if (e.naive_median_seconds) out << shortest(*e.naive_median_seconds);
    out << ',' << e.reps << '\n';
  }
}

}  // namespace ktau::bench
