#include "rbn/generate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rbn {

double critical_bias(uint32_t k_in, CriticalRoot root) {
  if (k_in < 2)
    throw std::invalid_argument("critical_bias: no real solution for k_in < 2");
  const double disc = std::sqrt(1.0 - 2.0 / k_in);
  return root == CriticalRoot::lower ? 0.5 * (1.0 - disc) : 0.5 * (1.0 + disc);
}

void FamilySpec::validate() const {
  if (n == 0) throw std::invalid_argument("family: n must be positive");
  if (k_in == 0) throw std::invalid_argument("family: k_in must be positive");
  if (k_in > n - 1)
    throw std::invalid_argument("family: k_in = " + std::to_string(k_in) +
                                " exceeds n - 1 = " + std::to_string(n - 1));
  if (const auto* b = std::get_if<BernoulliScheme>(&scheme)) {
    if (!(b->p >= 0.0 && b->p <= 1.0))
      throw std::invalid_argument("family: bias must lie in [0,1]");
  } else if (const auto* f = std::get_if<FunctionSetScheme>(&scheme)) {
    f->set.validate();
    if (f->set.arity() != k_in)
      throw std::invalid_argument("family: function set arity " +
                                  std::to_string(f->set.arity()) +
                                  " does not match k_in " + std::to_string(k_in));
  } else if (std::holds_alternative<MajorityScheme>(scheme)) {
    if (k_in % 2 == 0)
      throw std::invalid_argument("family: majority rule needs odd k_in");
  } else {
    critical_bias(k_in);  // throws for k_in < 2
  }
}

double FamilySpec::effective_bias() const {
  if (const auto* b = std::get_if<BernoulliScheme>(&scheme)) return b->p;
  if (const auto* c = std::get_if<CriticalBiasScheme>(&scheme))
    return critical_bias(k_in, c->root);
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<std::vector<uint32_t>> generate_topology(uint32_t n, uint32_t k_in,
                                                     RandomStream& rng) {
  if (k_in > n - 1)
    throw std::invalid_argument("generate_topology: k_in exceeds n - 1");
  std::vector<std::vector<uint32_t>> inputs(n);
  const bool dense = k_in * 2 > (n - 1);
  std::vector<uint32_t> pool;
  for (uint32_t i = 0; i < n; ++i) {
    auto& in = inputs[i];
    in.reserve(k_in);
    if (!dense) {
      // rejection over the n-1 candidates; cheap while k_in << n
      while (in.size() < k_in) {
        uint32_t c = static_cast<uint32_t>(rng.next_below(n - 1));
        if (c >= i) ++c;  // skip self
        if (std::find(in.begin(), in.end(), c) == in.end()) in.push_back(c);
      }
    } else {
      pool.clear();
      for (uint32_t c = 0; c < n; ++c)
        if (c != i) pool.push_back(c);
      for (uint32_t j = 0; j < k_in; ++j) {
        const uint32_t pick = j + static_cast<uint32_t>(rng.next_below(pool.size() - j));
        std::swap(pool[j], pool[pick]);
        in.push_back(pool[j]);
      }
    }
  }
  return inputs;
}

TruthTable sample_table_bernoulli(uint32_t k, double p, RandomStream& rng) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("sample_table_bernoulli: p must lie in [0,1]");
  TruthTable t(k);
  for (uint64_t r = 0; r < t.n_rows(); ++r)
    if (rng.bernoulli(p)) t.set_output(r, true);
  return t;
}

TruthTable sample_table_from_set(const FunctionSet& set, RandomStream& rng) {
  const double u = rng.next_double();
  double acc = 0.0;
  for (size_t m = 0; m < set.members.size(); ++m) {
    acc += set.probabilities[m];
    if (u < acc) return set.members[m];
  }
  return set.members.back();  // u landed in the rounding slack
}

TruthTable majority_table(uint32_t k) {
  if (k % 2 == 0)
    throw std::invalid_argument("majority_table: ties are undefined, k must be odd");
  TruthTable t(k);
  for (uint64_t r = 0; r < t.n_rows(); ++r)
    if (std::popcount(r) * 2 > k) t.set_output(r, true);
  return t;
}

BooleanNetwork build_network(const FamilySpec& spec, RandomStream& rng) {
  spec.validate();
  auto inputs = generate_topology(spec.n, spec.k_in, rng);
  std::vector<TruthTable> tables;
  tables.reserve(spec.n);
  if (const auto* bern = std::get_if<BernoulliScheme>(&spec.scheme)) {
    for (uint32_t i = 0; i < spec.n; ++i)
      tables.push_back(sample_table_bernoulli(spec.k_in, bern->p, rng));
  } else if (const auto* crit = std::get_if<CriticalBiasScheme>(&spec.scheme)) {
    const double p = critical_bias(spec.k_in, crit->root);
    for (uint32_t i = 0; i < spec.n; ++i)
      tables.push_back(sample_table_bernoulli(spec.k_in, p, rng));
  } else if (const auto* fs = std::get_if<FunctionSetScheme>(&spec.scheme)) {
    for (uint32_t i = 0; i < spec.n; ++i)
      tables.push_back(sample_table_from_set(fs->set, rng));
  } else {
    const TruthTable maj = majority_table(spec.k_in);
    tables.assign(spec.n, maj);
  }
  return BooleanNetwork(std::move(inputs), std::move(tables));
}

}  // namespace rbn
