#pragma once

#include <cstdint>
#include <vector>

namespace ktau {

/// Standard-normal draws from std::mt19937_64 via the Box-Muller transform.
///
/// The engine's output sequence is fixed by the C++ standard; the uniform
/// mapping (top 53 bits, scaled) and the transform are written out here rather
/// than delegated to std::normal_distribution, whose algorithm is
/// implementation-defined. Given the same libm, a (seed, count) pair yields
/// bit-identical values on every platform.
std::vector<double> standard_normal_draws(std::uint64_t seed, std::size_t count);

}  // namespace ktau
