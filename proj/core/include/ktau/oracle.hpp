#pragma once

#include <cstdint>
#include <map>

#include "ktau/sample.hpp"

// Brute-force reference implementations. Quadratic (or factorial) on purpose:
// nothing here may be shared with the fast path it is used to check.
namespace ktau::oracle {

struct PairCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t ties_x_only = 0;
  std::int64_t ties_y_only = 0;
  std::int64_t ties_both = 0;
  std::int64_t total_pairs = 0;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Classifies every unordered pair i<j. Throws std::logic_error if the five
/// classes fail to partition n(n-1)/2.
PairCounts brute_force_counts(const PairedSample& sample);

/// Same classification summed over ordered pairs (i, j != i). Every count is
/// exactly twice the unordered one.
PairCounts brute_force_counts_ordered(const PairedSample& sample);

/// (c-d) / sqrt((c+d+e)(c+d+f)). Throws DegenerateError on a zero denominator.
double brute_force_tau(const PairedSample& sample);

inline constexpr int kMaxEnumerationN = 8;

/// Frequency of each c-d value over all n! orderings of y = 1..n against x = 1..n.
/// Throws Error(n_too_large) for n > 8 and Error(too_short) for n < 2.
std::map<std::int64_t, std::int64_t> enumerate_null_distribution(int n);

}  // namespace ktau::oracle
