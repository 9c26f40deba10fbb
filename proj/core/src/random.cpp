#include "ktau/random.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ktau {

namespace {

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

// (0, 1]: never zero, so the logarithm below is finite.
double open_unit(std::mt19937_64& engine) {
  return static_cast<double>((engine() >> 11) + 1) * kTwoPow53Inv;
}

// [0, 1)
double half_open_unit(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * kTwoPow53Inv;
}

}  // namespace

std::vector<double> standard_normal_draws(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 engine(seed);
  std::vector<double> out;
  out.reserve(count + 1);
  while (out.size() < count) {
    const double radius = std::sqrt(-2.0 * std::log(open_unit(engine)));
    const double angle = 2.0 * std::numbers::pi * half_open_unit(engine);
    out.push_back(radius * std::cos(angle));
    out.push_back(radius * std::sin(angle));
  }
  out.resize(count);
  return out;
}

}  // namespace ktau
