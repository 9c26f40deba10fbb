#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ktau/sample.hpp"

namespace ktau {

/// Pair counts of ties. A tie group of size g contributes g(g-1)/2 pairs.
struct TieCounts {
  std::int64_t pairs_tied_x = 0;
  std::int64_t pairs_tied_y = 0;
  std::int64_t pairs_tied_both = 0;

  friend bool operator==(const TieCounts&, const TieCounts&) = default;
};

/// Moments of the tie-group sizes t of one sorted vector, as needed by the
/// tie-corrected null variance of the numerator. Doubles, because t^3 sums
/// overflow 64 bits long before the pair counts do.
struct TieGroupMoments {
  double sum_t1 = 0.0;       ///< sum of t(t-1)
  double sum_t1_t2 = 0.0;    ///< sum of t(t-1)(t-2)
  double sum_t1_2t5 = 0.0;   ///< sum of t(t-1)(2t+5)

  bool has_ties() const noexcept { return sum_t1 > 0.0; }

  friend bool operator==(const TieGroupMoments&, const TieGroupMoments&) = default;
};

struct TauResult {
  double tau = 0.0;
  std::int64_t n = 0;
  std::int64_t m = 0;          ///< n(n-1)/2
  std::int64_t swaps = 0;      ///< inversions of y after sorting by (x, y)
  std::int64_t numerator = 0;  ///< concordant minus discordant
  TieCounts ties;
  TieGroupMoments x_groups;
  TieGroupMoments y_groups;

  friend bool operator==(const TauResult&, const TauResult&) = default;
};

struct SortedPairs {
  std::vector<double> x;
  std::vector<double> y;
};

/// Sorts pairs by x, breaking x ties by y, through an index permutation.
/// Ordering y inside each x run is what keeps x-tied pairs out of the swap count.
SortedPairs sort_pairs_by_x_then_y(const PairedSample& sample);

/// Sum of g(g-1)/2 over maximal runs of equal values. The input must be sorted;
/// this is not checked, and unsorted input yields the count over adjacent runs only.
std::int64_t count_tie_pairs(std::span<const double> sorted_values);

/// Tie-group moments of a sorted vector (same precondition as count_tie_pairs).
TieGroupMoments tie_group_moments(std::span<const double> sorted_values);

/// Pairs equal in both coordinates. Requires (x, y)-sorted input so that equal
/// pairs are adjacent.
std::int64_t count_joint_tie_pairs(std::span<const double> x_sorted,
                                   std::span<const double> y_sorted);

struct SwapCount {
  std::int64_t swaps = 0;
  std::vector<double> sorted;
};

/// Number of pairs i<j with y_i > y_j (equal values are not inversions),
/// together with y in nondecreasing order.
SwapCount merge_sort_count_swaps(std::vector<double> y);

/// In-place variant: sorts `values`, using `scratch` (same size) as the merge buffer.
std::int64_t sort_counting_inversions(std::span<double> values, std::span<double> scratch);

/// Kendall's tau-b in O(n log n). Throws DegenerateError if x or y is constant.
TauResult kendall_tau(const PairedSample& sample);

}  // namespace ktau
