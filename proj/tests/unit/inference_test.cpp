#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "ktau/error.hpp"
#include "ktau/inference.hpp"
#include "ktau/oracle.hpp"

namespace ktau {
namespace {

using Vec = std::vector<double>;

PairedSample make(const Vec& x, const Vec& y) { return validate_sample(x, y); }

TestOptions opts(Alternative alt, Method method = Method::automatic, bool continuity = false) {
  return TestOptions{alt, method, continuity};
}

TEST(ExactNullCdf, SmallExamples) {
  EXPECT_EQ(exact_null_cdf(3, 3), 1.0);
  EXPECT_NEAR(exact_null_cdf(-3, 3), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(exact_null_cdf(0, 4), 15.0 / 24.0, 1e-15);
}

TEST(ExactNullCdf, MatchesEnumeration) {
  for (int n = 2; n <= oracle::kMaxEnumerationN; ++n) {
    const auto table = oracle::enumerate_null_distribution(n);
    double total = 0.0;
    for (const auto& [value, count] : table) total += static_cast<double>(count);
    double cumulative = 0.0;
    for (const auto& [value, count] : table) {
      cumulative += static_cast<double>(count);
      EXPECT_NEAR(exact_null_cdf(value, n), cumulative / total, 1e-12) << n << " " << value;
    }
  }
}

TEST(ExactNullCdf, UnattainableValuesRoundDown) {
  // n = 3 only reaches odd values; P(C-D <= 0) = P(C-D <= -1) = 3/6
  EXPECT_NEAR(exact_null_cdf(0, 3), 0.5, 1e-15);
  EXPECT_EQ(exact_null_cdf(-4, 3), 0.0);
  EXPECT_EQ(exact_null_cdf(100, 3), 1.0);
}

TEST(ExactNullCdf, ComplementsAcrossSizes) {
  // P(C-D <= k) + P(C-D >= k + 2) = 1, the upper tail read through symmetry.
  for (std::int64_t n : {9, 20, 49, 170, 300}) {
    const std::int64_t m = n * (n - 1) / 2;
    for (std::int64_t k = -m; k < m; k += std::max<std::int64_t>(2, m / 7 * 2)) {
      EXPECT_NEAR(exact_null_cdf(k, n) + exact_null_cdf(-k - 2, n), 1.0, 1e-12) << n << " " << k;
    }
  }
}

TEST(ExactNullCdf, Limits) {
  EXPECT_THROW(exact_null_cdf(0, 1), Error);
  try {
    exact_null_cdf(0, kExactMaxN + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::exact_not_applicable);
  }
}

TEST(NullVariance, NoTiesMatchesEnumeratedVariance) {
  for (int n = 2; n <= oracle::kMaxEnumerationN; ++n) {
    double second_moment = 0.0;
    double total = 0.0;
    for (const auto& [value, count] : oracle::enumerate_null_distribution(n)) {
      second_moment += static_cast<double>(value * value * count);
      total += static_cast<double>(count);
    }
    Vec x(static_cast<std::size_t>(n));
    std::iota(x.begin(), x.end(), 0.0);
    const TauResult r = kendall_tau(make(x, x));
    EXPECT_NEAR(null_variance(r), second_moment / total, 1e-12);
  }
}

// Permutation variance of C - D with ties, enumerated over every ordering of y.
double enumerated_tied_variance(const Vec& x, Vec y) {
  std::sort(y.begin(), y.end());
  double sum_sq = 0.0;
  double count = 0.0;
  std::vector<std::size_t> idx(y.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    Vec permuted(y.size());
    for (std::size_t i = 0; i < idx.size(); ++i) permuted[i] = y[idx[i]];
    const auto c = oracle::brute_force_counts(make(x, permuted));
    const auto s = static_cast<double>(c.concordant - c.discordant);
    sum_sq += s * s;
    count += 1.0;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return sum_sq / count;
}

TEST(NullVariance, TiesMatchEnumeratedPermutationVariance) {
  const std::vector<std::pair<Vec, Vec>> cases = {
      {{1, 1, 2, 3, 3, 3, 4}, {5, 6, 6, 7, 8, 8, 9}},
      {{1, 1, 1, 2, 2, 3, 4, 5}, {1, 2, 2, 2, 3, 3, 4, 4}},
      {{1, 2, 3, 4, 5, 6}, {1, 1, 1, 2, 2, 3}},
      {{1, 1, 2, 2, 3, 3, 4, 4}, {1, 1, 1, 1, 2, 2, 2, 3}},
  };
  for (const auto& [x, y] : cases) {
    const TauResult r = kendall_tau(make(x, y));
    EXPECT_NEAR(null_variance(r), enumerated_tied_variance(x, y), 1e-9);
  }
}

TEST(TauNormalStatistic, NoTiesExamples) {
  TauResult zero;
  zero.n = 10;
  zero.m = 45;
  zero.numerator = 0;
  EXPECT_EQ(tau_normal_statistic(zero), 0.0);

  Vec x(10);
  std::iota(x.begin(), x.end(), 1.0);
  const TauResult perfect = kendall_tau(make(x, x));
  ASSERT_EQ(perfect.numerator, 45);
  EXPECT_NEAR(tau_normal_statistic(perfect), 45.0 / std::sqrt(125.0), 1e-14);
}

TEST(TauNormalStatistic, AllTiedYIsDegenerate) {
  TauResult r;
  r.n = 10;
  r.m = 45;
  r.ties.pairs_tied_y = 45;
  r.y_groups = tie_group_moments(Vec(10, 2.0));
  EXPECT_NEAR(null_variance(r), 0.0, 1e-9);
  try {
    tau_normal_statistic(r);
    FAIL();
  } catch (const DegenerateError& e) {
    EXPECT_EQ(e.which(), Variable::y);
  }
}

TEST(KendallTest, ConcordantTriple) {
  const PairedSample s = make({1, 2, 3}, {1, 2, 3});
  const TestResult greater = kendall_test(s, opts(Alternative::greater, Method::exact));
  EXPECT_NEAR(greater.p_value, 1.0 / 6.0, 1e-15);
  EXPECT_EQ(greater.method, TestMethod::exact);
  EXPECT_EQ(greater.statistic, 1.0);
  EXPECT_EQ(kendall_test(s, opts(Alternative::less, Method::exact)).p_value, 1.0);
  EXPECT_NEAR(kendall_test(s, opts(Alternative::two_sided, Method::exact)).p_value, 1.0 / 3.0,
              1e-15);
}

TEST(KendallTest, AlternativeText) {
  const PairedSample s = make({1, 2, 3}, {1, 3, 2});
  EXPECT_EQ(kendall_test(s, opts(Alternative::less)).alternative_text,
            "alternative hypothesis: true tau is less than 0");
  EXPECT_EQ(kendall_test(s, opts(Alternative::greater)).alternative_text,
            "alternative hypothesis: true tau is greater than 0");
  EXPECT_EQ(kendall_test(s, opts(Alternative::two_sided)).alternative_text,
            "alternative hypothesis: true tau is not equal to 0");
}

// Reference values from scipy.stats.kendalltau (exact for the untied case,
// asymptotic without continuity correction for the tied one).
TEST(KendallTest, ScipyReferenceValues) {
  Vec a{17, 86, 60, 77, 47, 3, 70, 87, 88, 92};
  const Vec b{70, 29, 85, 61, 80, 34, 60, 31, 73, 66};
  const TestResult untied = kendall_test(make(a, b));
  EXPECT_EQ(untied.method, TestMethod::exact);
  EXPECT_NEAR(untied.statistic, -0.06666666666666667, 1e-15);
  EXPECT_NEAR(untied.p_value, 0.8618005952380953, 1e-12);

  a[7] = 47;
  const TestResult tied = kendall_test(make(a, b));
  EXPECT_EQ(tied.method, TestMethod::normal_approx);
  EXPECT_NEAR(tied.statistic, 0.04494665749754947, 1e-15);
  EXPECT_NEAR(tied.p_value, 0.8574624419592412, 1e-12);
}

TEST(KendallTest, AutomaticMethodSelection) {
  std::mt19937_64 rng(4);
  EXPECT_EQ(kendall_test(testing::random_sample(rng, 49, testing::Shape::tie_free)).method,
            TestMethod::exact);
  EXPECT_EQ(kendall_test(testing::random_sample(rng, 50, testing::Shape::tie_free)).method,
            TestMethod::normal_approx);
  EXPECT_EQ(kendall_test(testing::random_sample(rng, 20, testing::Shape::tie_heavy)).method,
            TestMethod::normal_approx);
  EXPECT_EQ(kendall_test(testing::random_sample(rng, 20, testing::Shape::tie_free),
                         opts(Alternative::two_sided, Method::normal_approx))
                .method,
            TestMethod::normal_approx);
  EXPECT_EQ(kendall_test(testing::random_sample(rng, 200, testing::Shape::tie_free),
                         opts(Alternative::two_sided, Method::exact))
                .method,
            TestMethod::exact);
}

TEST(KendallTest, ExactRejectsTies) {
  try {
    kendall_test(make({1, 1, 2, 3}, {1, 2, 3, 4}), opts(Alternative::less, Method::exact));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::exact_not_applicable);
  }
}

TEST(KendallTest, DegenerateInputPropagates) {
  EXPECT_THROW(kendall_test(make({1, 2, 3}, {7, 7, 7})), DegenerateError);
}

TEST(KendallTest, TwoSidedIsDoubledSmallerTail) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const PairedSample s = testing::random_sample(rng, 2 + trial % 30, testing::Shape::tie_free);
    for (const Method method : {Method::exact, Method::normal_approx}) {
      const double less = kendall_test(s, opts(Alternative::less, method)).p_value;
      const double greater = kendall_test(s, opts(Alternative::greater, method)).p_value;
      const double two = kendall_test(s, opts(Alternative::two_sided, method)).p_value;
      EXPECT_DOUBLE_EQ(two, std::min(1.0, 2.0 * std::min(less, greater)));
      if (method == Method::exact) {
        EXPECT_GE(less + greater, 1.0 - 1e-12);
      } else {
        EXPECT_NEAR(less + greater, 1.0, 1e-12);
      }
      EXPECT_GE(two, 0.0);
      EXPECT_LE(two, 1.0);
    }
  }
}

TEST(KendallTest, SignFlipSwapsTails) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const PairedSample s = testing::random_sample(rng, 2 + trial % 40, testing::Shape::tie_free);
    Vec neg(s.y().begin(), s.y().end());
    for (double& v : neg) v = -v;
    const PairedSample flipped = make(Vec(s.x().begin(), s.x().end()), neg);
    EXPECT_EQ(kendall_test(s, opts(Alternative::less, Method::exact)).p_value,
              kendall_test(flipped, opts(Alternative::greater, Method::exact)).p_value);
    EXPECT_EQ(kendall_test(s, opts(Alternative::greater, Method::exact)).p_value,
              kendall_test(flipped, opts(Alternative::less, Method::exact)).p_value);
  }
}

TEST(KendallTest, TailsMonotoneInNumerator) {
  for (std::int64_t n : {5, 12, 30}) {
    const std::int64_t m = n * (n - 1) / 2;
    double prev_less = -1.0;
    double prev_greater = 2.0;
    for (std::int64_t k = -m; k <= m; k += 2) {
      const double less = exact_null_cdf(k, n);
      const double greater = exact_null_cdf(-k, n);
      EXPECT_GE(less, prev_less);
      EXPECT_LE(greater, prev_greater);
      prev_less = less;
      prev_greater = greater;
    }
  }
}

TEST(KendallTest, ContinuityCorrectionShrinksEvidence) {
  std::mt19937_64 rng(14);
  const PairedSample s = testing::random_sample(rng, 80, testing::Shape::tie_free);
  for (const Alternative alt : {Alternative::two_sided, Alternative::less, Alternative::greater}) {
    const TestResult plain = kendall_test(s, opts(alt, Method::normal_approx, false));
    const TestResult corrected = kendall_test(s, opts(alt, Method::normal_approx, true));
    ASSERT_TRUE(plain.z && corrected.z);
    EXPECT_NE(plain.p_value, corrected.p_value);
    EXPECT_EQ(plain.statistic, corrected.statistic);
  }
  // The correction moves the two-sided z toward zero.
  const auto p = kendall_test(s, opts(Alternative::two_sided, Method::normal_approx, false));
  const auto c = kendall_test(s, opts(Alternative::two_sided, Method::normal_approx, true));
  EXPECT_LT(std::abs(*c.z), std::abs(*p.z));
  EXPECT_GT(c.p_value, p.p_value);
}

TEST(KendallTest, ParseAlternative) {
  EXPECT_EQ(parse_alternative("two-sided"), Alternative::two_sided);
  EXPECT_EQ(parse_alternative("two_sided"), Alternative::two_sided);
  EXPECT_EQ(parse_alternative("less"), Alternative::less);
  EXPECT_EQ(parse_alternative("greater"), Alternative::greater);
  EXPECT_FALSE(parse_alternative("bigger"));
}

}  // namespace
}  // namespace ktau
