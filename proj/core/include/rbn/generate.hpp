#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rbn/function_set.hpp"
#include "rbn/network.hpp"
#include "rbn/random.hpp"

namespace rbn {

enum class CriticalRoot { lower, upper };

/// Solves 2 p (1 - p) = 1 / k_in for the bias that puts a Bernoulli family on
/// the order/chaos boundary. Two roots exist for k_in > 2; they coincide at
/// 0.5 for k_in = 2. Throws for k_in < 2 (no real root).
double critical_bias(uint32_t k_in, CriticalRoot root = CriticalRoot::lower);

struct BernoulliScheme {
  double p = 0.5;
};
struct CriticalBiasScheme {
  CriticalRoot root = CriticalRoot::lower;
};
struct FunctionSetScheme {
  FunctionSet set;
};
struct MajorityScheme {};

using FunctionScheme =
    std::variant<BernoulliScheme, CriticalBiasScheme, FunctionSetScheme, MajorityScheme>;

/// Recipe for one network family: size, uniform in-degree, and how truth
/// tables are drawn. Topology is always uniform over input sets with no
/// self-loops and no duplicate arcs.
struct FamilySpec {
  uint32_t n = 0;
  uint32_t k_in = 0;
  FunctionScheme scheme = BernoulliScheme{};
  std::string tag;  // label carried into result records

  void validate() const;  // throws std::invalid_argument
  // Bias actually used for table sampling; NaN for set/majority schemes.
  double effective_bias() const;
};

/// k_in distinct inputs per node, self excluded, uniform over admissible sets.
std::vector<std::vector<uint32_t>> generate_topology(uint32_t n, uint32_t k_in,
                                                     RandomStream& rng);

/// Each of the 2^k output bits is an independent Bernoulli(p) draw.
TruthTable sample_table_bernoulli(uint32_t k, double p, RandomStream& rng);

/// Member drawn with its listed probability.
TruthTable sample_table_from_set(const FunctionSet& set, RandomStream& rng);

/// Output 1 iff more than half of the (odd number of) inputs are 1.
TruthTable majority_table(uint32_t k);

BooleanNetwork build_network(const FamilySpec& spec, RandomStream& rng);

}  // namespace rbn
