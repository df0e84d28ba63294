#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace salesfc {

/// Deterministic pseudo-random machinery. Every stochastic step in the
/// pipeline (weight init, dropout, shuffling, splits, demand sampling)
/// draws from an mt19937_64 whose seed is derived from the experiment
/// seed plus a stable label, so results are reproducible bit for bit
/// and independent of thread scheduling.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return splitmix64(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::string_view s) {
  std::uint64_t h = seed ^ 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

/// Stable substream seed from an arbitrary mix of labels and indices.
template <typename... Parts>
std::uint64_t derive_seed(std::uint64_t base, Parts&&... parts) {
  std::uint64_t h = splitmix64(base);
  ((h = hash_combine(h, parts)), ...);
  return h;
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

/// Uniform double in [0, 1), built from raw bits so the mapping is ours,
/// not the standard library's (keeps streams stable across toolchains).
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Integer in [0, n). n must be > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

/// Fisher-Yates in-place shuffle.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = uniform_index(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

/// k distinct values from {lo, ..., hi}, returned sorted.
inline std::vector<int> sample_without_replacement(Rng& rng, int lo, int hi, int k) {
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  shuffle(pool, rng);
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace salesfc
