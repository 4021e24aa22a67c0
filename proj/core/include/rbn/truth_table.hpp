#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rbn {

/// Boolean function of k inputs stored as a packed output column of 2^k bits.
/// Row indices read the input configuration as a binary number with the first
/// listed input in the most significant position, so for k=2 the rows are
/// (0,0), (0,1), (1,0), (1,1) and OR is "0111".
class TruthTable {
 public:
  static constexpr uint32_t kMaxArity = 24;

  explicit TruthTable(uint32_t arity) : arity_(check_arity(arity)) {
    words_.assign(word_count(arity_), 0);
  }

  static TruthTable constant(uint32_t arity, bool value) {
    TruthTable t(arity);
    if (value) {
      for (auto& w : t.words_) w = ~uint64_t(0);
      t.mask_tail();
    }
    return t;
  }

  // Parses an output column like "0111" (row 0 first).
  static TruthTable from_bits(uint32_t arity, std::string_view outputs) {
    TruthTable t(arity);
    if (outputs.size() != t.n_rows())
      throw std::invalid_argument("truth table: expected " +
                                  std::to_string(t.n_rows()) + " output bits, got " +
                                  std::to_string(outputs.size()));
    for (uint64_t r = 0; r < t.n_rows(); ++r) {
      if (outputs[r] == '1') {
        t.set_output(r, true);
      } else if (outputs[r] != '0') {
        throw std::invalid_argument("truth table: outputs must be 0/1 characters");
      }
    }
    return t;
  }

  uint32_t arity() const { return arity_; }
  uint64_t n_rows() const { return uint64_t(1) << arity_; }

  bool output(uint64_t row) const {
    return (words_[row >> 6] >> (row & 63u)) & 1u;
  }

  void set_output(uint64_t row, bool v) {
    const uint64_t mask = uint64_t(1) << (row & 63u);
    if (v) {
      words_[row >> 6] |= mask;
    } else {
      words_[row >> 6] &= ~mask;
    }
  }

  TruthTable complement() const {
    TruthTable t(arity_);
    for (size_t i = 0; i < words_.size(); ++i) t.words_[i] = ~words_[i];
    t.mask_tail();
    return t;
  }

  std::string to_bits() const {
    std::string s(n_rows(), '0');
    for (uint64_t r = 0; r < n_rows(); ++r)
      if (output(r)) s[r] = '1';
    return s;
  }

  std::span<const uint64_t> words() const { return words_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  static uint32_t check_arity(uint32_t k) {
    if (k < 1 || k > kMaxArity)
      throw std::invalid_argument("truth table arity must be in [1, " +
                                  std::to_string(kMaxArity) + "]");
    return k;
  }
  static size_t word_count(uint32_t k) {
    return ((uint64_t(1) << k) + 63u) / 64u;
  }
  void mask_tail() {
    if (arity_ < 6) words_.back() &= (uint64_t(1) << n_rows()) - 1u;
  }

  uint32_t arity_;
  std::vector<uint64_t> words_;
};

/// Evaluates the table on an explicit input configuration (values 0/1, first
/// input first).
inline bool eval_table(const TruthTable& t, std::span<const uint8_t> config) {
  if (config.size() != t.arity())
    throw std::invalid_argument("eval_table: config length does not match arity");
  uint64_t row = 0;
  for (uint8_t v : config) row = (row << 1) | uint64_t(v & 1u);
  return t.output(row);
}

inline bool eval_table(const TruthTable& t, std::initializer_list<uint8_t> config) {
  return eval_table(t, std::span<const uint8_t>(config.begin(), config.size()));
}

}  // namespace rbn
