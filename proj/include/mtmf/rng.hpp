#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mtmf {

// Mixing finalizer from splitmix64. Used to turn (seed + role offset) into a
// well-spread 64-bit stream seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Every randomized component draws its seed from the single top-level run
// seed plus a fixed role offset, so each sub-stream is independently
// reproducible. Per-episode and per-game streams add the episode/game index
// to the role base.
namespace seed_role {
inline constexpr std::uint64_t kEnvironment = 0x01;
inline constexpr std::uint64_t kPolicy = 0x02;
inline constexpr std::uint64_t kReplay = 0x03;
inline constexpr std::uint64_t kClustering = 0x04;
inline constexpr std::uint64_t kTypeInit = 0x05;
inline constexpr std::uint64_t kAnalysis = 0x06;
inline constexpr std::uint64_t kEpisodeBase = 0x1000;
inline constexpr std::uint64_t kGameBase = 0x2000000;
}  // namespace seed_role

inline std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t role) {
  return splitmix64(run_seed + role);
}

// Uniform double in [0, 1). std::generate_canonical is deterministic for a
// fixed libstdc++, which is all the reproducibility contract asks for.
inline double uniform_unit(std::mt19937_64& rng) {
  return std::generate_canonical<double, 53>(rng);
}

// Samples an index from a probability vector by CDF inversion.
// Assumes probs sums to ~1; the final index absorbs rounding slack.
inline int sample_index(const std::vector<double>& probs, std::mt19937_64& rng) {
  const double u = uniform_unit(rng);
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    cum += probs[i];
    if (u < cum) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace mtmf
