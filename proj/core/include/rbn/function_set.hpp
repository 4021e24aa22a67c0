#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbn/truth_table.hpp"

namespace rbn {

/// Finite pool of Boolean functions with draw probabilities, all of one arity.
struct FunctionSet {
  std::vector<TruthTable> members;
  std::vector<double> probabilities;

  static FunctionSet uniform(std::vector<TruthTable> tables);

  uint32_t arity() const { return members.front().arity(); }
  void validate() const;  // throws std::invalid_argument
};

namespace function_sets {

// k=2 canalizing pools mapped from threshold rules; member i of m6() is the
// bitwise complement of member i of m5().
FunctionSet m5();
FunctionSet m6();

// The 13 two-input functions left after dropping XOR, XNOR and FALSE.
FunctionSet yeast13();

std::optional<FunctionSet> by_name(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace function_sets

}  // namespace rbn
