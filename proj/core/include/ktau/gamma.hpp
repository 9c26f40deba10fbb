#pragma once

#include <cstdint>

namespace ktau {

/// Natural log of the Gamma function for x > 0 (Lanczos, g = 7, nine terms).
/// Relative accuracy is around 1e-15 over the whole positive axis. Unlike
/// std::lgamma it touches no global state (glibc sets `signgam`).
/// Throws std::domain_error for x <= 0 or NaN.
double log_gamma(double x);

/// log(n!) = log_gamma(n + 1).
double log_factorial(std::int64_t n);

}  // namespace ktau
