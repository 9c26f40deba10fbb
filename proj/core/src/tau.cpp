#include "ktau/tau.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <utility>

#include "ktau/error.hpp"

namespace ktau {

namespace {

// Runs shorter than this are sorted by insertion before merging.
constexpr std::size_t kInsertionCutoff = 16;

std::int64_t pairs_in_group(std::int64_t g) { return g * (g - 1) / 2; }

// Each shift past a strictly larger element removes exactly one inversion.
std::int64_t insertion_sort_count(std::span<double> v) {
  std::int64_t swaps = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double val = v[i];
    std::size_t j = i;
    while (j > 0 && v[j - 1] > val) {
      v[j] = v[j - 1];
      --j;
    }
    v[j] = val;
    swaps += static_cast<std::int64_t>(i - j);
  }
  return swaps;
}

// Stable merge of [from, from+mid) and [from+mid, from+len) into `to`.
// Taking the left element on equality keeps ties from counting as inversions.
std::int64_t merge_count(const double* from, double* to, std::size_t mid, std::size_t len) {
  std::size_t i = 0;
  std::size_t j = mid;
  std::size_t k = 0;
  std::int64_t swaps = 0;
  while (i < mid && j < len) {
    if (from[j] < from[i]) {
      to[k++] = from[j++];
      swaps += static_cast<std::int64_t>(mid - i);
    } else {
      to[k++] = from[i++];
    }
  }
  std::copy(from + i, from + mid, to + k);
  std::copy(from + j, from + len, to + k + (mid - i));
  return swaps;
}

template <typename Visit>
void for_each_run(std::span<const double> sorted, Visit&& visit) {
  std::size_t start = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted[i] != sorted[start]) {
      visit(static_cast<std::int64_t>(i - start));
      start = i;
    }
  }
}

}  // namespace

SortedPairs sort_pairs_by_x_then_y(const PairedSample& sample) {
  const auto x = sample.x();
  const auto y = sample.y();
  std::vector<std::size_t> perm(sample.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });

  SortedPairs out;
  out.x.resize(perm.size());
  out.y.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.x[i] = x[perm[i]];
    out.y[i] = y[perm[i]];
  }
  return out;
}

std::int64_t count_tie_pairs(std::span<const double> sorted_values) {
  std::int64_t total = 0;
  for_each_run(sorted_values, [&](std::int64_t g) { total += pairs_in_group(g); });
  return total;
}

TieGroupMoments tie_group_moments(std::span<const double> sorted_values) {
  TieGroupMoments m;
  for_each_run(sorted_values, [&](std::int64_t g) {
    if (g < 2) return;
    const auto t = static_cast<double>(g);
    m.sum_t1 += t * (t - 1.0);
    m.sum_t1_t2 += t * (t - 1.0) * (t - 2.0);
    m.sum_t1_2t5 += t * (t - 1.0) * (2.0 * t + 5.0);
  });
  return m;
}

std::int64_t count_joint_tie_pairs(std::span<const double> x_sorted,
                                   std::span<const double> y_sorted) {
  assert(x_sorted.size() == y_sorted.size());
  std::int64_t total = 0;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= x_sorted.size(); ++i) {
    if (i == x_sorted.size() || x_sorted[i] != x_sorted[start] || y_sorted[i] != y_sorted[start]) {
      total += pairs_in_group(static_cast<std::int64_t>(i - start));
      start = i;
    }
  }
  return total;
}

std::int64_t sort_counting_inversions(std::span<double> values, std::span<double> scratch) {
  assert(scratch.size() >= values.size());
  const std::size_t n = values.size();
  std::int64_t swaps = 0;

  for (std::size_t lo = 0; lo < n; lo += kInsertionCutoff) {
    swaps += insertion_sort_count(values.subspan(lo, std::min(kInsertionCutoff, n - lo)));
  }

  // Bottom-up merging, ping-ponging between the two buffers.
  double* src = values.data();
  double* dst = scratch.data();
  for (std::size_t width = kInsertionCutoff; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t len = std::min(2 * width, n - lo);
      const std::size_t mid = std::min(width, len);
      swaps += merge_count(src + lo, dst + lo, mid, len);
    }
    std::swap(src, dst);
  }
  if (src != values.data()) std::copy(src, src + n, values.data());
  return swaps;
}

SwapCount merge_sort_count_swaps(std::vector<double> y) {
  std::vector<double> scratch(y.size());
  SwapCount out;
  out.swaps = sort_counting_inversions(y, scratch);
  out.sorted = std::move(y);
  return out;
}

TauResult kendall_tau(const PairedSample& sample) {
  auto [xs, ys] = sort_pairs_by_x_then_y(sample);

  TauResult r;
  r.n = static_cast<std::int64_t>(sample.size());
  r.m = r.n * (r.n - 1) / 2;
  r.ties.pairs_tied_x = count_tie_pairs(xs);
  r.x_groups = tie_group_moments(xs);
  r.ties.pairs_tied_both = count_joint_tie_pairs(xs, ys);

  // xs doubles as the merge buffer; it is not needed after this point.
  r.swaps = sort_counting_inversions(ys, xs);

  r.ties.pairs_tied_y = count_tie_pairs(ys);
  r.y_groups = tie_group_moments(ys);

  const std::int64_t untied_x = r.m - r.ties.pairs_tied_x;
  const std::int64_t untied_y = r.m - r.ties.pairs_tied_y;
  if (untied_x == 0) throw DegenerateError(Variable::x);
  if (untied_y == 0) throw DegenerateError(Variable::y);

  r.numerator = r.m - r.ties.pairs_tied_x - r.ties.pairs_tied_y + r.ties.pairs_tied_both -
                2 * r.swaps;
  // One sqrt of the product: sqrt(a) * sqrt(a) can miss a by an ulp, which
  // would knock perfect agreement off 1.0.
  const double denom =
      std::sqrt(static_cast<double>(untied_x) * static_cast<double>(untied_y));
  r.tau = std::clamp(static_cast<double>(r.numerator) / denom, -1.0, 1.0);
  return r;
}

}  // namespace ktau
