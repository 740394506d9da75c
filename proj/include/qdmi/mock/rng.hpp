/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Counter-based deterministic random numbers for the mock service.
 * @details Everything random in the service (fixture metrics, calibration
 * jitter, shot sampling) derives from splitmix64 so that a fixed seed yields
 * byte-identical behavior across runs.
 */

#pragma once

#include <cstdint>

namespace qdmi::mock {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// splitmix64 finalizer.
[[nodiscard]] constexpr auto mix64(std::uint64_t z) -> std::uint64_t {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Combines a seed with a counter into an independent-looking key.
[[nodiscard]] constexpr auto mixSeed(const std::uint64_t seed,
                                     const std::uint64_t counter)
    -> std::uint64_t {
  return mix64(seed + kGoldenGamma * (counter + 1));
}

/// Uniform double in [0, 1) keyed by (seed, counter); stateless.
[[nodiscard]] inline auto uniform01(const std::uint64_t seed,
                                    const std::uint64_t counter) -> double {
  return static_cast<double>(mixSeed(seed, counter) >> 11) * 0x1.0p-53;
}

/// Sequential splitmix64 stream for fixture generation.
class SeededStream {
public:
  explicit constexpr SeededStream(const std::uint64_t seed) : state_(seed) {}

  constexpr auto nextU64() -> std::uint64_t {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  auto nextUnit() -> double {
    return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
  }

  auto nextIn(const double lo, const double hi) -> double {
    return lo + (hi - lo) * nextUnit();
  }

private:
  std::uint64_t state_;
};

} // namespace qdmi::mock
