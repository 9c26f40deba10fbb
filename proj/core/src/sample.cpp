#include "ktau/sample.hpp"

#include <cmath>
#include <string>

#include "ktau/error.hpp"

namespace ktau {

namespace {

void require_finite(std::span<const double> v, Variable which) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) throw NonFiniteError(which, i);
  }
}

}  // namespace

PairedSample validate_sample(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(Errc::length_mismatch, "length mismatch: x has " + std::to_string(x.size()) +
                                           " values, y has " + std::to_string(y.size()));
  }
  if (x.size() < 2) {
    throw Error(Errc::too_short,
                "need at least 2 pairs, got " + std::to_string(x.size()));
  }
  require_finite(x, Variable::x);
  require_finite(y, Variable::y);
  return PairedSample({x.begin(), x.end()}, {y.begin(), y.end()});
}

}  // namespace ktau
