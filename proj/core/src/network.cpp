#include "rbn/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rbn {

BooleanNetwork::BooleanNetwork(std::vector<std::vector<uint32_t>> inputs,
                               std::vector<TruthTable> tables) {
  if (inputs.empty())
    throw std::invalid_argument("network: must have at least one node");
  if (inputs.size() != tables.size())
    throw std::invalid_argument("network: " + std::to_string(inputs.size()) +
                                " input lists but " + std::to_string(tables.size()) +
                                " tables");
  n_ = static_cast<uint32_t>(inputs.size());

  input_offset_.reserve(n_ + 1);
  input_offset_.push_back(0);
  table_word_offset_.reserve(n_ + 1);
  table_word_offset_.push_back(0);
  out_degree_.assign(n_, 0);

  for (uint32_t i = 0; i < n_; ++i) {
    const auto& in = inputs[i];
    if (in.size() != tables[i].arity())
      throw std::invalid_argument("network: node " + std::to_string(i) + " has " +
                                  std::to_string(in.size()) + " inputs but a table of arity " +
                                  std::to_string(tables[i].arity()));
    for (uint32_t src : in) {
      if (src >= n_)
        throw std::invalid_argument("network: node " + std::to_string(i) +
                                    " reads out-of-range node " + std::to_string(src));
      if (src == i) self_loops_ = true;
      ++out_degree_[src];
    }
    for (size_t a = 0; a + 1 < in.size() && !duplicate_inputs_; ++a)
      for (size_t b = a + 1; b < in.size(); ++b)
        if (in[a] == in[b]) {
          duplicate_inputs_ = true;
          break;
        }

    input_flat_.insert(input_flat_.end(), in.begin(), in.end());
    input_offset_.push_back(static_cast<uint32_t>(input_flat_.size()));

    const auto tw = tables[i].words();
    table_words_.insert(table_words_.end(), tw.begin(), tw.end());
    table_word_offset_.push_back(static_cast<uint32_t>(table_words_.size()));
  }

  uint64_t arcs = 0;
  for (uint32_t i = 0; i < n_; ++i) {
    arcs += out_degree_[i];
    max_out_degree_ = std::max(max_out_degree_, out_degree_[i]);
  }
  mean_out_degree_ = static_cast<double>(arcs) / n_;

  // successor lists, deduplicated
  std::vector<std::vector<uint32_t>> succ(n_);
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t src : inputs[i]) succ[src].push_back(i);
  succ_offset_.reserve(n_ + 1);
  succ_offset_.push_back(0);
  for (uint32_t i = 0; i < n_; ++i) {
    auto& v = succ[i];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    succ_flat_.insert(succ_flat_.end(), v.begin(), v.end());
    succ_offset_.push_back(static_cast<uint32_t>(succ_flat_.size()));
  }
}

TruthTable BooleanNetwork::table(uint32_t i) const {
  TruthTable t(arity(i));
  for (uint64_t r = 0; r < t.n_rows(); ++r)
    if (table_output(i, r)) t.set_output(r, true);
  return t;
}

}  // namespace rbn
