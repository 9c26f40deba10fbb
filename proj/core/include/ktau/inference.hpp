#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ktau/sample.hpp"
#include "ktau/tau.hpp"

namespace ktau {

enum class Alternative { two_sided, less, greater };

/// Requested method; `automatic` picks exact for tie-free samples with n < 50.
enum class Method { automatic, exact, normal_approx };

/// Method actually used for a p-value.
enum class TestMethod { exact, normal_approx };

std::string_view to_string(Alternative a) noexcept;
std::string_view to_string(TestMethod m) noexcept;

/// Accepts "two-sided"/"two_sided", "less", "greater".
std::optional<Alternative> parse_alternative(std::string_view text) noexcept;

/// "alternative hypothesis: true tau is less than 0", etc.
std::string alternative_sentence(Alternative a);

inline constexpr std::int64_t kExactAutoLimit = 50;
/// Largest n the exact recursion accepts. The table costs O(n^3) to build.
inline constexpr std::int64_t kExactMaxN = 1000;

struct TestOptions {
  Alternative alternative = Alternative::two_sided;
  Method method = Method::automatic;
  bool continuity = false;  ///< only affects the normal approximation
};

struct TestResult {
  double statistic = 0.0;  ///< tau
  double p_value = 1.0;
  Alternative alternative = Alternative::two_sided;
  TestMethod method = TestMethod::normal_approx;
  std::string alternative_text;
  std::int64_t n = 0;
  std::int64_t numerator = 0;
  std::optional<double> z;  ///< set for the normal approximation only
};

/// P(C - D <= k) for n untied observations under independence, from the
/// recursion on permutations by inversion count normalized by n!.
/// k need not be attainable; it is rounded down to the nearest attainable value.
/// Throws Error(too_short) for n < 2 and Error(exact_not_applicable) for n > kExactMaxN.
double exact_null_cdf(std::int64_t k, std::int64_t n);

/// Tie-corrected null variance of C - D.
double null_variance(const TauResult& result);

/// numerator / sqrt(null_variance). Throws DegenerateError when the variance vanishes.
double tau_normal_statistic(const TauResult& result);

/// Throws DegenerateError, or Error(exact_not_applicable) when the exact method is
/// forced on tied data or n > kExactMaxN.
TestResult kendall_test(const PairedSample& sample, const TestOptions& options = {});

}  // namespace ktau
