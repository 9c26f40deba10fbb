#include "ktau/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktau/error.hpp"

namespace ktau::oracle {

namespace {

int sign(double v) { return (v > 0) - (v < 0); }

// The sign of (x_i - x_j)(y_i - y_j), taken factor by factor so that tiny
// differences cannot underflow the product to zero.
void classify(double xi, double xj, double yi, double yj, PairCounts& c) {
  const int product = sign(xi - xj) * sign(yi - yj);
  if (product > 0) {
    ++c.concordant;
  } else if (product < 0) {
    ++c.discordant;
  } else if (xi == xj && yi != yj) {
    ++c.ties_x_only;
  } else if (xi != xj && yi == yj) {
    ++c.ties_y_only;
  } else {
    ++c.ties_both;
  }
}

std::int64_t sum_classes(const PairCounts& c) {
  return c.concordant + c.discordant + c.ties_x_only + c.ties_y_only + c.ties_both;
}

}  // namespace

PairCounts brute_force_counts(const PairedSample& sample) {
  const auto x = sample.x();
  const auto y = sample.y();
  const std::size_t n = sample.size();
  PairCounts c;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) classify(x[i], x[j], y[i], y[j], c);
  }
  const auto nn = static_cast<std::int64_t>(n);
  c.total_pairs = nn * (nn - 1) / 2;
  if (sum_classes(c) != c.total_pairs) {
    throw std::logic_error("pair classes do not partition n(n-1)/2");
  }
  return c;
}

PairCounts brute_force_counts_ordered(const PairedSample& sample) {
  const auto x = sample.x();
  const auto y = sample.y();
  const std::size_t n = sample.size();
  PairCounts c;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) classify(x[i], x[j], y[i], y[j], c);
    }
  }
  const auto nn = static_cast<std::int64_t>(n);
  c.total_pairs = nn * (nn - 1);
  if (sum_classes(c) != c.total_pairs) {
    throw std::logic_error("ordered pair classes do not partition n(n-1)");
  }
  return c;
}

double brute_force_tau(const PairedSample& sample) {
  const PairCounts c = brute_force_counts(sample);
  const std::int64_t untied_y = c.concordant + c.discordant + c.ties_x_only;
  const std::int64_t untied_x = c.concordant + c.discordant + c.ties_y_only;
  if (untied_x == 0) throw DegenerateError(Variable::x);
  if (untied_y == 0) throw DegenerateError(Variable::y);
  return static_cast<double>(c.concordant - c.discordant) /
         std::sqrt(static_cast<double>(untied_x) * static_cast<double>(untied_y));
}

std::map<std::int64_t, std::int64_t> enumerate_null_distribution(int n) {
  if (n < 2) throw Error(Errc::too_short, "enumeration needs n >= 2");
  if (n > kMaxEnumerationN) {
    throw Error(Errc::n_too_large, "enumeration limited to n <= " +
                                       std::to_string(kMaxEnumerationN) + ", got " +
                                       std::to_string(n));
  }
  std::vector<int> y(static_cast<std::size_t>(n));
  std::iota(y.begin(), y.end(), 1);
  std::map<std::int64_t, std::int64_t> table;
  do {
    std::int64_t score = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      for (std::size_t j = i + 1; j < y.size(); ++j) score += y[i] < y[j] ? 1 : -1;
    }
    ++table[score];
  } while (std::next_permutation(y.begin(), y.end()));
  return table;
}

}  // namespace ktau::oracle
