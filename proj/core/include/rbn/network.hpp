#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rbn/state.hpp"
#include "rbn/truth_table.hpp"

namespace rbn {

/// Immutable network structure: per-node ordered input lists plus one truth
/// table per node. Inputs and table bits are stored flattened so that the
/// synchronous update loop touches contiguous memory.
///
/// Generated networks have no self-loops and no duplicate arcs; imported
/// ones may, and are only flagged.
class BooleanNetwork {
 public:
  BooleanNetwork() = default;
  BooleanNetwork(std::vector<std::vector<uint32_t>> inputs,
                 std::vector<TruthTable> tables);

  uint32_t node_count() const { return n_; }

  uint32_t arity(uint32_t i) const {
    return input_offset_[i + 1] - input_offset_[i];
  }

  std::span<const uint32_t> inputs(uint32_t i) const {
    return {input_flat_.data() + input_offset_[i], arity(i)};
  }

  TruthTable table(uint32_t i) const;

  // Nodes that read node i, deduplicated and ascending.
  std::span<const uint32_t> successors(uint32_t i) const {
    return {succ_flat_.data() + succ_offset_[i],
            succ_offset_[i + 1] - succ_offset_[i]};
  }

  // Out-degree counts arc multiplicity, so in- and out-degree sums agree.
  uint32_t out_degree(uint32_t i) const { return out_degree_[i]; }
  uint32_t max_out_degree() const { return max_out_degree_; }
  double mean_out_degree() const { return mean_out_degree_; }
  double mean_in_degree() const { return mean_out_degree_; }

  bool has_self_loops() const { return self_loops_; }
  bool has_duplicate_inputs() const { return duplicate_inputs_; }

  bool table_output(uint32_t i, uint64_t row) const {
    const uint64_t w = table_word_offset_[i] + (row >> 6);
    return (table_words_[w] >> (row & 63u)) & 1u;
  }

  bool eval_node(uint32_t i, const NetworkState& s) const {
    const uint32_t* in = input_flat_.data() + input_offset_[i];
    const uint32_t k = arity(i);
    uint64_t row = 0;
    for (uint32_t j = 0; j < k; ++j) row = (row << 1) | uint64_t(s.bit(in[j]));
    return table_output(i, row);
  }

 private:
  uint32_t n_ = 0;
  std::vector<uint32_t> input_flat_;
  std::vector<uint32_t> input_offset_;  // n_+1 entries
  std::vector<uint64_t> table_words_;
  std::vector<uint32_t> table_word_offset_;  // n_+1 entries
  std::vector<uint32_t> out_degree_;
  std::vector<uint32_t> succ_flat_;
  std::vector<uint32_t> succ_offset_;  // n_+1 entries
  uint32_t max_out_degree_ = 0;
  double mean_out_degree_ = 0.0;
  bool self_loops_ = false;
  bool duplicate_inputs_ = false;
};

}  // namespace rbn
