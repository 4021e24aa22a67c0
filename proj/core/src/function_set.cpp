#include "rbn/function_set.hpp"

#include <cmath>
#include <stdexcept>

namespace rbn {

FunctionSet FunctionSet::uniform(std::vector<TruthTable> tables) {
  FunctionSet s;
  s.probabilities.assign(tables.size(), tables.empty() ? 0.0 : 1.0 / tables.size());
  s.members = std::move(tables);
  s.validate();
  return s;
}

void FunctionSet::validate() const {
  if (members.empty())
    throw std::invalid_argument("function set: empty");
  if (probabilities.size() != members.size())
    throw std::invalid_argument("function set: probability list length mismatch");
  const uint32_t k = members.front().arity();
  for (const auto& t : members)
    if (t.arity() != k)
      throw std::invalid_argument("function set: mixed arities");
  double sum = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw std::invalid_argument("function set: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("function set: probabilities sum to " +
                                std::to_string(sum) + ", expected 1");
}

namespace function_sets {

namespace {

FunctionSet from_bitstrings(std::initializer_list<const char*> tables) {
  std::vector<TruthTable> members;
  for (const char* bits : tables) members.push_back(TruthTable::from_bits(2, bits));
  return FunctionSet::uniform(std::move(members));
}

}  // namespace

FunctionSet m5() {
  // A|B, A&~B, ~A&B, FALSE
  return from_bitstrings({"0111", "0010", "0100", "0000"});
}

FunctionSet m6() {
  // ~(A|B), ~A|B, A|~B, TRUE
  return from_bitstrings({"1000", "1101", "1011", "1111"});
}

FunctionSet yeast13() {
  std::vector<TruthTable> members;
  for (uint32_t code = 0; code < 16; ++code) {
    if (code == 0b0000) continue;  // FALSE
    if (code == 0b0110) continue;  // XOR
    if (code == 0b1001) continue;  // XNOR
    TruthTable t(2);
    for (uint64_t r = 0; r < 4; ++r)
      if ((code >> r) & 1u) t.set_output(r, true);
    members.push_back(std::move(t));
  }
  return FunctionSet::uniform(std::move(members));
}

std::optional<FunctionSet> by_name(std::string_view name) {
  if (name == "M5") return m5();
  if (name == "M6") return m6();
  if (name == "yeast13") return yeast13();
  return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"M5", "M6", "yeast13"}; }

}  // namespace function_sets

}  // namespace rbn
