#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "ktau/error.hpp"
#include "ktau/oracle.hpp"

namespace ktau::oracle {
namespace {

using Vec = std::vector<double>;

TEST(BruteForceCounts, Examples) {
  EXPECT_EQ(brute_force_counts(validate_sample(Vec{1, 2, 3}, Vec{1, 2, 3})),
            (PairCounts{3, 0, 0, 0, 0, 3}));
  EXPECT_EQ(brute_force_counts(validate_sample(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4})),
            (PairCounts{5, 1, 0, 0, 0, 6}));
  EXPECT_EQ(brute_force_counts(validate_sample(Vec{1, 1, 2}, Vec{1, 2, 3})),
            (PairCounts{2, 0, 1, 0, 0, 3}));
}

TEST(BruteForceCounts, JointTieIsItsOwnClass) {
  EXPECT_EQ(brute_force_counts(validate_sample(Vec{1, 1, 2}, Vec{5, 5, 4})),
            (PairCounts{0, 2, 0, 0, 1, 3}));
}

TEST(BruteForceCounts, OrderedCountsAreDoubled) {
  std::mt19937_64 rng(8);
  for (const auto shape : testing::kAllShapes) {
    for (std::size_t n = 2; n < 40; n += 3) {
      const PairedSample s = testing::random_sample(rng, n, shape);
      const PairCounts u = brute_force_counts(s);
      const PairCounts o = brute_force_counts_ordered(s);
      EXPECT_EQ(o.concordant, 2 * u.concordant);
      EXPECT_EQ(o.discordant, 2 * u.discordant);
      EXPECT_EQ(o.ties_x_only, 2 * u.ties_x_only);
      EXPECT_EQ(o.ties_y_only, 2 * u.ties_y_only);
      EXPECT_EQ(o.ties_both, 2 * u.ties_both);
      EXPECT_EQ(o.total_pairs, 2 * u.total_pairs);
    }
  }
}

// c + d + e equals m minus the pairs tied in y, and symmetrically for x.
TEST(BruteForceCounts, DenominatorIdentity) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const PairedSample s = testing::random_sample(rng, 2 + trial % 50, testing::Shape::tie_heavy);
    const PairCounts c = brute_force_counts(s);
    EXPECT_EQ(c.concordant + c.discordant + c.ties_x_only,
              c.total_pairs - c.ties_y_only - c.ties_both);
    EXPECT_EQ(c.concordant + c.discordant + c.ties_y_only,
              c.total_pairs - c.ties_x_only - c.ties_both);
  }
}

TEST(BruteForceTau, Examples) {
  EXPECT_EQ(brute_force_tau(validate_sample(Vec{1, 2, 3}, Vec{3, 2, 1})), -1.0);
  EXPECT_NEAR(brute_force_tau(validate_sample(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4})), 4.0 / 6.0,
              1e-15);
  EXPECT_NEAR(brute_force_tau(validate_sample(Vec{1, 1, 2}, Vec{1, 2, 3})), 2.0 / std::sqrt(6.0),
              1e-15);
}

TEST(BruteForceTau, Degenerate) {
  EXPECT_THROW(brute_force_tau(validate_sample(Vec{2, 2, 2}, Vec{1, 2, 3})), DegenerateError);
  EXPECT_THROW(brute_force_tau(validate_sample(Vec{1, 2, 3}, Vec{0, 0, 0})), DegenerateError);
}

TEST(EnumerateNull, SmallTables) {
  using Table = std::map<std::int64_t, std::int64_t>;
  EXPECT_EQ(enumerate_null_distribution(2), (Table{{-1, 1}, {1, 1}}));
  EXPECT_EQ(enumerate_null_distribution(3), (Table{{-3, 1}, {-1, 2}, {1, 2}, {3, 1}}));
  EXPECT_EQ(enumerate_null_distribution(4),
            (Table{{-6, 1}, {-4, 3}, {-2, 5}, {0, 6}, {2, 5}, {4, 3}, {6, 1}}));
}

TEST(EnumerateNull, TotalsAndSymmetry) {
  std::int64_t factorial = 1;
  for (int n = 2; n <= kMaxEnumerationN; ++n) {
    factorial *= n;
    const auto table = enumerate_null_distribution(n);
    std::int64_t total = 0;
    for (const auto& [value, count] : table) {
      total += count;
      ASSERT_TRUE(table.contains(-value));
      EXPECT_EQ(table.at(-value), count);
    }
    EXPECT_EQ(total, factorial);
  }
}

TEST(EnumerateNull, Limits) {
  try {
    enumerate_null_distribution(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::n_too_large);
  }
  EXPECT_THROW(enumerate_null_distribution(1), Error);
}

}  // namespace
}  // namespace ktau::oracle
