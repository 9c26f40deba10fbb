#include "ktau/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ktau/error.hpp"
#include "ktau/gamma.hpp"

namespace ktau {

namespace {

// Counts of permutations of n elements with s inversions, s = 0..n(n-1)/2.
// Rows are rescaled when they grow large; the accumulated log of the scale
// comes back through `log_scale`.
std::vector<double> inversion_counts(std::int64_t n, double& log_scale) {
  constexpr double kRescaleAbove = 1e280;
  const auto m = static_cast<std::size_t>(n * (n - 1) / 2);
  std::vector<double> row(m + 1, 0.0);
  std::vector<double> next(m + 1, 0.0);
  row[0] = 1.0;
  log_scale = 0.0;
  std::size_t width = 0;  // max inversions for the current row size
  for (std::int64_t size = 2; size <= n; ++size) {
    // w(size, s) = sum_{j=0}^{size-1} w(size-1, s-j), as a sliding window sum.
    const auto span = static_cast<std::size_t>(size - 1);
    const std::size_t new_width = width + span;
    double window = 0.0;
    double peak = 0.0;
    for (std::size_t s = 0; s <= new_width; ++s) {
      if (s <= width) window += row[s];
      if (s >= span + 1 && s - span - 1 <= width) window -= row[s - span - 1];
      next[s] = window;
      peak = std::max(peak, window);
    }
    if (peak > kRescaleAbove) {
      for (std::size_t s = 0; s <= new_width; ++s) next[s] /= peak;
      log_scale += std::log(peak);
    }
    std::swap(row, next);
    width = new_width;
  }
  return row;
}

double standard_normal_lower(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
double standard_normal_upper(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

std::string_view to_string(Alternative a) noexcept {
  switch (a) {
    case Alternative::two_sided: return "two-sided";
    case Alternative::less: return "less";
    case Alternative::greater: return "greater";
  }
  return "two-sided";
}

std::string_view to_string(TestMethod m) noexcept {
  return m == TestMethod::exact ? "exact" : "normal_approx";
}

std::optional<Alternative> parse_alternative(std::string_view text) noexcept {
  if (text == "two-sided" || text == "two_sided") return Alternative::two_sided;
  if (text == "less") return Alternative::less;
  if (text == "greater") return Alternative::greater;
  return std::nullopt;
}

std::string alternative_sentence(Alternative a) {
  switch (a) {
    case Alternative::less: return "alternative hypothesis: true tau is less than 0";
    case Alternative::greater: return "alternative hypothesis: true tau is greater than 0";
    case Alternative::two_sided: break;
  }
  return "alternative hypothesis: true tau is not equal to 0";
}

double exact_null_cdf(std::int64_t k, std::int64_t n) {
  if (n < 2) throw Error(Errc::too_short, "exact null distribution needs n >= 2");
  if (n > kExactMaxN) {
    throw Error(Errc::exact_not_applicable,
                "exact null distribution limited to n <= " + std::to_string(kExactMaxN));
  }
  const std::int64_t m = n * (n - 1) / 2;
  // C - D = m - 2s for s inversions, so C - D <= k  <=>  s >= ceil((m - k) / 2).
  if (k >= m) return 1.0;
  if (k < -m) return 0.0;
  const std::int64_t diff = m - k;
  const std::int64_t s_min = diff / 2 + diff % 2;
  if (s_min <= 0) return 1.0;

  double log_scale = 0.0;
  const std::vector<double> counts = inversion_counts(n, log_scale);
  // The counts are symmetric in s <-> m - s; sum the short lower tail instead.
  double tail = 0.0;
  for (std::int64_t s = 0; s <= m - s_min; ++s) tail += counts[static_cast<std::size_t>(s)];
  if (tail <= 0.0) return 0.0;
  return clamp_probability(std::exp(std::log(tail) + log_scale - log_factorial(n)));
}

double null_variance(const TauResult& r) {
  const auto n = static_cast<double>(r.n);
  const TieGroupMoments& tx = r.x_groups;
  const TieGroupMoments& ty = r.y_groups;
  const double v0 = n * (n - 1.0) * (2.0 * n + 5.0);
  const double v1 = tx.sum_t1 * ty.sum_t1 / (2.0 * n * (n - 1.0));
  const double v2 = r.n > 2 ? tx.sum_t1_t2 * ty.sum_t1_t2 / (9.0 * n * (n - 1.0) * (n - 2.0)) : 0.0;
  return (v0 - tx.sum_t1_2t5 - ty.sum_t1_2t5) / 18.0 + v1 + v2;
}

double tau_normal_statistic(const TauResult& r) {
  if (r.ties.pairs_tied_x == r.m) throw DegenerateError(Variable::x);
  if (r.ties.pairs_tied_y == r.m) throw DegenerateError(Variable::y);
  const double v = null_variance(r);
  if (!(v > 0.0)) throw DegenerateError(std::nullopt, "null variance is zero");
  return static_cast<double>(r.numerator) / std::sqrt(v);
}

TestResult kendall_test(const PairedSample& sample, const TestOptions& options) {
  const TauResult tau = kendall_tau(sample);
  const bool tied = tau.x_groups.has_ties() || tau.y_groups.has_ties();

  TestResult out;
  out.statistic = tau.tau;
  out.alternative = options.alternative;
  out.alternative_text = alternative_sentence(options.alternative);
  out.n = tau.n;
  out.numerator = tau.numerator;

  bool exact = false;
  switch (options.method) {
    case Method::automatic: exact = !tied && tau.n < kExactAutoLimit; break;
    case Method::exact:
      if (tied) {
        throw Error(Errc::exact_not_applicable,
                    "exact test requires data without ties; use the normal approximation");
      }
      exact = true;
      break;
    case Method::normal_approx: exact = false; break;
  }

  double p_less = 0.0;
  double p_greater = 0.0;
  if (exact) {
    out.method = TestMethod::exact;
    p_less = exact_null_cdf(tau.numerator, tau.n);
    // The null is symmetric: P(C - D >= k) = P(C - D <= -k).
    p_greater = exact_null_cdf(-tau.numerator, tau.n);
  } else {
    out.method = TestMethod::normal_approx;
    const double sigma = std::sqrt(null_variance(tau));
    if (!(sigma > 0.0)) throw DegenerateError(std::nullopt, "null variance is zero");
    auto s = static_cast<double>(tau.numerator);
    if (options.continuity) {
      switch (options.alternative) {
        case Alternative::two_sided: s -= static_cast<double>((s > 0) - (s < 0)); break;
        case Alternative::greater: s -= 1.0; break;
        case Alternative::less: s += 1.0; break;
      }
    }
    const double z = s / sigma;
    out.z = z;
    p_less = standard_normal_lower(z);
    p_greater = standard_normal_upper(z);
  }

  switch (options.alternative) {
    case Alternative::less: out.p_value = p_less; break;
    case Alternative::greater: out.p_value = p_greater; break;
    case Alternative::two_sided: out.p_value = std::min(1.0, 2.0 * std::min(p_less, p_greater)); break;
  }
  out.p_value = clamp_probability(out.p_value);
  return out;
}

}  // namespace ktau
