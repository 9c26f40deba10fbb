#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ktau {

/// Two equal-length vectors of finite observations, n >= 2. The only way to
/// obtain one is validate_sample(), so every instance satisfies the invariants.
class PairedSample {
 public:
  std::span<const double> x() const noexcept { return x_; }
  std::span<const double> y() const noexcept { return y_; }
  std::size_t size() const noexcept { return x_.size(); }

  /// Same sample with the two sides exchanged.
  PairedSample swapped() const { return PairedSample(y_, x_); }

  friend bool operator==(const PairedSample&, const PairedSample&) = default;

 private:
  PairedSample(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {}

  friend PairedSample validate_sample(std::span<const double>, std::span<const double>);

  std::vector<double> x_;
  std::vector<double> y_;
};

/// Throws Error(length_mismatch), Error(too_short) or NonFiniteError.
/// x is scanned before y, so the reported index is the first bad one in x if any.
PairedSample validate_sample(std::span<const double> x, std::span<const double> y);

}  // namespace ktau
