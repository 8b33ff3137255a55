#pragma once

#include "lmc/graph.hpp"

#include <functional>
#include <stdexcept>

namespace lmc {

/// Partition of a graph's nodes into blocks, each inducing a connected
/// subgraph. Blocks are sorted internally and ordered by smallest member.
struct Decomposition {
    std::vector<std::vector<NodeId>> blocks;

    bool operator==(const Decomposition&) const = default;

    /// block index per node; requires blocks to cover 0..n-1.
    std::vector<std::size_t> block_of(std::size_t node_count) const;
};

/// Raised when an edge set fails the multicut test; carries the offending
/// edge and a connecting path in (V, E \ M) as witness.
class NotAMulticutError : public std::runtime_error {
public:
    NotAMulticutError(Edge witness, std::vector<NodeId> path)
        : std::runtime_error("not a multicut: endpoints of " + witness.str() + " remain connected"),
          witness_edge(witness), witness_path(std::move(path)) {}

    Edge witness_edge;
    std::vector<NodeId> witness_path;
};

/// Validates that blocks partition the node set and induce connected
/// subgraphs; returns the normalized decomposition.
Decomposition make_decomposition(const Graph& g, std::vector<std::vector<NodeId>> blocks);

/// Edges whose endpoints lie in distinct blocks. Always a multicut.
EdgeSet decomposition_to_multicut(const Graph& g, const Decomposition& pi);

/// Blocks are the maximal components of (V, E \ m). Throws NotAMulticutError
/// if some edge of m has both endpoints in one such component.
Decomposition multicut_to_decomposition(const Graph& g, const EdgeSet& m);

/// Component-based multicut test: no edge of m joins two nodes of one
/// component of (V, E \ m).
bool is_multicut(const Graph& g, const EdgeSet& m);

/// Same predicate via the cycle system over chordless cycles; kept as an
/// independent route and cross-checked in tests.
bool is_multicut_by_cycles(const Graph& g, const EdgeSet& m);

/// Cycle route over all cycles, for the chordless-sufficiency check.
bool is_multicut_by_all_cycles(const Graph& g, const EdgeSet& m);

/// Streams every decomposition exactly once, in a fixed deterministic order.
/// Blocks are grown as connected subsets containing the smallest unassigned
/// node, so the cost is proportional to the output, not to the Bell number.
/// Return false from the callback to stop early.
void for_each_decomposition(const Graph& g, const std::function<bool(const Decomposition&)>& fn);

std::vector<Decomposition> enumerate_decompositions(const Graph& g);

/// All multicuts via the decomposition bijection, each exactly once.
std::vector<EdgeSet> enumerate_multicuts(const Graph& g);

/// Equivalence relation on nodes, held as canonical representatives.
class EquivalenceRelation {
public:
    explicit EquivalenceRelation(std::vector<NodeId> representative);

    bool related(NodeId a, NodeId b) const { return repr_[a] == repr_[b]; }
    NodeId representative(NodeId a) const { return repr_[a]; }
    std::size_t size() const { return repr_.size(); }
    std::vector<std::vector<NodeId>> classes() const;

    bool operator==(const EquivalenceRelation&) const = default;

private:
    std::vector<NodeId> repr_; // repr_[a] = smallest member of a's class
};

/// The relation pairing nodes not separated by m. Defined for complete
/// graphs only; rejects non-complete graphs and non-multicuts.
EquivalenceRelation multicut_to_equivalence(const Graph& g, const EdgeSet& m);

} // namespace lmc
