#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace plclique {

using Seed = std::uint64_t;
using Rng = std::mt19937_64;

/// Named sub-streams. Every random draw in the library comes from an engine
/// seeded by derive_seed(master, purpose, counters...).
enum class Stream : std::uint64_t {
  weights = 1,
  vertex_count = 2,
  edges = 3,
  thinning = 4,
  candidates = 5,
  high_region = 6,
  replicate = 7,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Counter-based seed derivation: collision-free in practice for distinct
/// (master, purpose, counters) tuples and independent of call order.
Seed derive_seed(Seed master, Stream purpose,
                 std::initializer_list<std::uint64_t> counters = {}) noexcept;

inline Rng make_rng(Seed master, Stream purpose,
                    std::initializer_list<std::uint64_t> counters = {}) {
  return Rng(derive_seed(master, purpose, counters));
}

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform on (0, 1].
inline double uniform_open_closed(Rng& rng) noexcept {
  return 1.0 - uniform01(rng);
}

/// Uniform integer in [0, n) by 128-bit multiply-shift.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

/// Poisson draw that accepts a zero mean.
std::uint64_t poisson(Rng& rng, double mean);

}  // namespace plclique
