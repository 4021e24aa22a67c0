#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string_view>

#include "rbn/state.hpp"

namespace rbn {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

/// One deterministic random stream. Distribution helpers are implemented
/// in-house so that the produced sequences depend only on the seed, not on
/// the standard library in use.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound) by masked rejection.
  uint64_t next_below(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t mask = ~uint64_t(0) >> std::countl_zero(bound - 1);
    uint64_t v;
    do {
      v = eng_() & mask;
    } while (v >= bound);
    return v;
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 eng_;
};

/// Root of the experiment's randomness. Streams are derived from
/// (master_seed, tag, index pair); identical triples replay identical
/// sequences and distinct triples give independent streams, which keeps
/// parallel runs schedule-independent.
class RandomSource {
 public:
  explicit RandomSource(uint64_t master_seed) : master_(master_seed) {}

  uint64_t master_seed() const { return master_; }

  RandomStream stream(std::string_view tag, uint64_t a = 0, uint64_t b = 0) const {
    uint64_t h = splitmix64(master_ ^ fnv1a64(tag));
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    return RandomStream(h);
  }

 private:
  uint64_t master_;
};

/// Uniformly random state over {0,1}^n.
inline NetworkState random_state(uint32_t n_bits, RandomStream& rng) {
  NetworkState s(n_bits);
  auto words = s.words();
  for (auto& w : words) w = rng.next_u64();
  if (n_bits & 63u) words.back() &= (uint64_t(1) << (n_bits & 63u)) - 1u;
  return s;
}

}  // namespace rbn
