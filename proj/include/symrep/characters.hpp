#pragma once

#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symrep {

// Removes rim hooks of the given lengths in order.  Each residual shape is
// returned once with the summed Murnaghan-Nakayama signs.
std::vector<std::pair<Partition, BigInt>> remove_rim_hooks(const Partition& lambda,
                                                           const std::vector<int>& lengths);

// chi^lambda at a permutation of type rho padded with fixed points to |lambda|.
BigInt character(const Partition& lambda, const CycleType& rho);
// character / dim lambda
Rational normalized_character(const Partition& lambda, const CycleType& rho);

// n^{down r} * normalized_character(lambda, rho 1^{n-r}), 0 when r > n.
Rational shifted_power_sum(const CycleType& rho, const Partition& lambda);

struct UnderdeterminedSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finds c with sum_rho c_rho p#_rho(lambda) = values[lambda] for every supplied
// lambda, over all rho with kerov_degree <= d.  Zero coefficients are omitted.
std::map<CycleType, Rational> expand_in_shifted_basis(const std::map<Partition, Rational>& values,
                                                      int degree_bound);

// Character table memo size, for tests.
std::size_t character_cache_size();

} // namespace symrep
