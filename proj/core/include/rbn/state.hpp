#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rbn {

/// Fixed-length bit vector holding one Boolean value per node, packed into
/// 64-bit words. Node 0 lives in the least significant bit of word 0.
/// Padding bits above size() are kept at zero so that equality, hashing and
/// lexicographic comparison can work word-wise.
class NetworkState {
 public:
  NetworkState() = default;
  explicit NetworkState(uint32_t n_bits)
      : n_bits_(n_bits), words_((n_bits + 63u) / 64u, 0) {}

  // Parses "0110..." with node 0 first.
  static NetworkState from_string(std::string_view s) {
    NetworkState st(static_cast<uint32_t>(s.size()));
    for (uint32_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        st.set_bit(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("state string must contain only 0/1");
      }
    }
    return st;
  }

  uint32_t size() const { return n_bits_; }

  bool bit(uint32_t i) const {
    return (words_[i >> 6] >> (i & 63u)) & 1u;
  }

  void set_bit(uint32_t i, bool v) {
    const uint64_t mask = uint64_t(1) << (i & 63u);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(uint32_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63u); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  uint32_t count_ones() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
    return c;
  }

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  std::string to_string() const {
    std::string s(n_bits_, '0');
    for (uint32_t i = 0; i < n_bits_; ++i)
      if (bit(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const NetworkState&, const NetworkState&) = default;

  // Lexicographic order on the bit string written node 0 first ('0' < '1').
  static bool lex_less(const NetworkState& a, const NetworkState& b) {
    for (size_t w = 0; w < a.words_.size(); ++w) {
      const uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const int i = std::countr_zero(diff);
        return ((a.words_[w] >> i) & 1u) == 0;
      }
    }
    return false;
  }

 private:
  uint32_t n_bits_ = 0;
  std::vector<uint64_t> words_;
};

struct StateHash {
  size_t operator()(const NetworkState& s) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : s.words()) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<size_t>(h ^ s.size());
  }
};

/// Number of positions at which two equal-length states differ.
inline uint32_t hamming_distance(const NetworkState& a, const NetworkState& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: states have different lengths");
  uint32_t d = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (size_t i = 0; i < wa.size(); ++i)
    d += static_cast<uint32_t>(std::popcount(wa[i] ^ wb[i]));
  return d;
}

/// Copy of `s` with bit `i` inverted.
inline NetworkState flip_bit(const NetworkState& s, uint32_t i) {
  if (i >= s.size()) throw std::out_of_range("flip_bit: node index out of range");
  NetworkState r = s;
  r.flip(i);
  return r;
}

}  // namespace rbn
