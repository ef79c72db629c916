#ifndef SSRP_RANDOM_HPP
#define SSRP_RANDOM_HPP

#include <cstdint>
#include <random>

namespace ssrp {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed from (parent seed, tag, depth); stable across platforms.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag, std::uint64_t depth) {
  return splitmix64(splitmix64(parent ^ (tag * 0x632be59bd9b4e019ULL)) + depth);
}

/// Uniform double in [0, 1) from the top 53 bits; avoids the
/// implementation-defined std distributions so runs reproduce everywhere.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(Rng& rng, double p) { return p >= 1.0 || uniform01(rng) < p; }

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace ssrp

#endif  // SSRP_RANDOM_HPP
