#pragma once

#include <cstdint>

namespace defect_robust {

/// Stateless counter-based generator: every draw is a pure function of
/// (key, counter), so parallel evaluation order cannot change results.
/// Mixing is the splitmix64 finalizer applied twice.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t key, std::uint64_t counter) {
  return splitmix64(splitmix64(key) ^ splitmix64(counter ^ 0x632be59bd9b4e019ULL));
}

/// Derives an independent key for a sub-stream.
constexpr std::uint64_t derive_key(std::uint64_t key, std::uint64_t stream) {
  return counter_hash(key ^ 0xd1b54a32d192ed03ULL, stream);
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double counter_uniform(std::uint64_t key, std::uint64_t counter) {
  return static_cast<double>(counter_hash(key, counter) >> 11) * 0x1.0p-53;
}

}  // namespace defect_robust
