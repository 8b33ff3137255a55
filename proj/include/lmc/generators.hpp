#pragma once

#include "lmc/solver.hpp"

#include <cstdint>

namespace lmc {

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_grid(std::size_t rows, std::size_t cols);
Graph gen_complete(std::size_t n);

/// Pair with the given base and extra lifted edges on top of it.
LiftedPair make_lifted_pair(Graph base, const EdgeSet& extra_lifted);

/// Seeded random pair: base edges drawn independently with probability p
/// (resampled until connected, bounded retries), then every non-base pair
/// added to the lifted graph independently with probability lift.
LiftedPair gen_random_pair(std::size_t n, double p, double lift, std::uint64_t seed);

/// Random integer costs, uniform on [lo, hi], in canonical lifted edge order.
CostFunction gen_random_costs(const LiftedPair& pair, long long lo, long long hi, std::uint64_t seed);

} // namespace lmc
