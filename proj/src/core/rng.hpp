#pragma once

#include <cstdint>
#include <random>

namespace uavhet {

using Rng = std::mt19937_64;

// Independent purpose-keyed streams. Baseline and UAV runs draw placement,
// demand and arrivals from the same streams, so only the mapper stream differs.
enum class Stream : std::uint64_t {
  kPlacement = 1,
  kDemand = 2,
  kArrivals = 3,
  kMapper = 4,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

inline Rng make_stream(std::uint64_t seed, std::uint64_t cell, Stream purpose) {
  return Rng(derive_seed(seed, cell + 1, static_cast<std::uint64_t>(purpose)));
}

}  // namespace uavhet
