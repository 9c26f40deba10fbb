#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ktau/sample.hpp"

namespace ktau::bench {

enum class Implementation { fast, naive };

inline constexpr std::int64_t kDefaultNaiveCutoff = 20000;
inline constexpr int kMinReps = 3;

/// Two independent standard-normal vectors of length n: x takes the first n
/// draws of the seeded stream, y the next n.
PairedSample generate_random_sample(std::int64_t n, std::uint64_t seed);

/// Median wall time in seconds over `reps` timed runs, after one untimed warmup.
/// Every run must produce the same tau (std::logic_error otherwise).
/// Throws std::invalid_argument for reps < 3 and Error(cutoff_exceeded) when the
/// naive path is requested above `naive_cutoff`.
double time_tau(const PairedSample& sample, int reps, Implementation which,
                std::int64_t naive_cutoff = kDefaultNaiveCutoff);

struct BenchEntry {
  std::int64_t n = 0;
  double fast_median_seconds = 0.0;
  std::optional<double> naive_median_seconds;
  int reps = 0;
};

struct BenchReport {
  std::vector<BenchEntry> entries;  ///< ascending by n
  double fitted_loglog_slope_fast = 0.0;
  std::optional<double> fitted_loglog_slope_naive;  ///< when >= 2 sizes ran naive
  std::uint64_t seed = 0;
};

/// Least-squares slope of log(seconds) against log(n).
double loglog_slope(std::span<const double> n, std::span<const double> seconds);

/// Times the fast path at every size, and the naive path at sizes up to the cutoff.
/// Requires at least 3 distinct sizes spanning a factor of 10 or more
/// (Error(insufficient_sizes) otherwise).
BenchReport scaling_report(std::span<const std::int64_t> sizes, int reps, std::uint64_t seed,
                           std::int64_t naive_cutoff = kDefaultNaiveCutoff);

/// Header `n,fast_median_s,naive_median_s,reps`; an absent naive time is an empty cell.
void write_csv(std::ostream& out, const BenchReport& report);

}  // namespace ktau::bench
