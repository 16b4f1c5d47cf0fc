#pragma once

#include <cstdint>

namespace rollsim {

/// Counter-based generator state: draw k of a stream is a pure function of
/// (seed, k), so streams are reproducible and can be split per scenario.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t counter = 0;

  friend bool operator==(const RngState&, const RngState&) = default;
};

template <class T>
struct Draw {
  T value;
  RngState state;
};

/// SplitMix64 output for index `counter` of stream `seed`.
Draw<std::uint64_t> next_u64(RngState s);
/// Uniform on the open interval (0, 1).
Draw<double> next_uniform(RngState s);
/// Standard normal via Box-Muller (consumes two counters).
Draw<double> next_gaussian(RngState s);

}  // namespace rollsim
