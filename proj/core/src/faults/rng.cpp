#include "rollsim/faults/rng.hpp"

#include <cmath>
#include <numbers>

namespace rollsim {

Draw<std::uint64_t> next_u64(RngState s) {
  std::uint64_t z = s.seed + (s.counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  ++s.counter;
  return {z, s};
}

Draw<double> next_uniform(RngState s) {
  const auto d = next_u64(s);
  // 53 random bits, shifted off zero.
  const double u = (static_cast<double>(d.value >> 11) + 0.5) * 0x1.0p-53;
  return {u, d.state};
}

Draw<double> next_gaussian(RngState s) {
  const auto a = next_uniform(s);
  const auto b = next_uniform(a.state);
  const double g = std::sqrt(-2.0 * std::log(a.value)) * std::cos(2.0 * std::numbers::pi * b.value);
  return {g, b.state};
}

}  // namespace rollsim
