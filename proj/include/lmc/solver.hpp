#pragma once

#include "lmc/polytope.hpp"

namespace lmc {

/// Integer edge costs over the canonical lifted edge order, total on E'.
struct CostFunction {
    std::vector<long long> costs;

    long long objective(const Labeling& x) const;
};

CostFunction make_costs(const LiftedPair& pair, const std::vector<long long>& by_index);

enum class Certificate { optimal, heuristic };

struct Solution {
    Labeling labeling;
    long long objective = 0;
    Certificate certificate = Certificate::optimal;
    std::uint64_t nodes_explored = 0;
    double wall_ms = 0;
};

class InstanceTooLargeError : public std::runtime_error {
public:
    InstanceTooLargeError(std::size_t nodes, std::size_t guard)
        : std::runtime_error("instance has " + std::to_string(nodes) +
                             " nodes, enumeration guard is " + std::to_string(guard)),
          node_count(nodes), guard_limit(guard) {}

    std::size_t node_count;
    std::size_t guard_limit;
};

struct SolveOptions {
    std::size_t max_nodes = 12; // enumeration guard
    bool force = false;
};

/// Global optimum by enumerating base decompositions. Ties are broken toward
/// the smallest labeling in canonical bit-string order.
Solution solve_exact(const LiftedPair& pair, const CostFunction& c, const SolveOptions& opts = {});

/// Same optimum by branch and bound over base edge labels (0-branch first),
/// lifted labels propagated through component semantics, bound = fixed cost
/// plus the negative part of every undecided cost.
Solution solve_branch_and_bound(const LiftedPair& pair, const CostFunction& c);

/// Greedy joining: starts from singletons and repeatedly merges the adjacent
/// pair of components with the largest positive separation cost. Objective is
/// never below the exact optimum.
Solution solve_greedy(const LiftedPair& pair, const CostFunction& c);

/// Rational point in the box [0,1]^{E'}.
struct FractionalPoint {
    std::vector<Rational> values;
};

/// Most-violated member per inequality family (cycle, path, cut), found by
/// exact shortest-path resp. minimum-cut searches; empty iff no canonical
/// inequality is violated. Results ordered by decreasing violation, ties in
/// family order.
std::vector<TaggedInequality> separate(const LiftedPair& pair, const FractionalPoint& x);

} // namespace lmc
