#pragma once

#include "lmc/partition.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace lmc {

/// 01-vector indexed by the canonical edge order of the lifted graph.
using Labeling = std::vector<std::uint8_t>;

std::string labeling_to_string(const Labeling& x);
Labeling labeling_from_string(const std::string& s);

/// Base graph G together with an augmented graph G' on the same nodes,
/// E subset of E'. The base must be connected; every result about the
/// feasible set assumes it. F = E' \ E holds the lifted-only edges.
class LiftedPair {
public:
    LiftedPair(Graph base, Graph lifted);

    const Graph& base() const { return base_; }
    const Graph& lifted() const { return lifted_; }
    const EdgeSet& lifted_only() const { return lifted_only_; } // F, canonical order
    std::size_t node_count() const { return base_.node_count(); }
    std::size_t lifted_edge_count() const { return lifted_.edge_count(); }

    bool is_base_edge(const Edge& e) const { return base_.has_edge(e); }
    std::size_t index_of(const Edge& e) const; // position in canonical E' order

    bool operator==(const LiftedPair&) const = default;

private:
    Graph base_;
    Graph lifted_;
    EdgeSet lifted_only_;
};

/// Labeling induced on E' by a decomposition of the base graph: an edge is 1
/// iff its endpoints lie in distinct blocks.
Labeling labeling_from_decomposition(const LiftedPair& pair, const Decomposition& pi);

/// Lifts a multicut of G to the multicut of G' induced by the same
/// decomposition. The restriction of the result to E equals m.
EdgeSet lift(const LiftedPair& pair, const EdgeSet& m);

/// Feasibility by component semantics: x is a lifted multicut iff for every
/// uv in E', x_uv = 0 exactly when u and v are joined by a path of 0-labeled
/// base edges.
bool is_lifted_multicut(const LiftedPair& pair, const Labeling& x);

/// Independent route: evaluates the full inequality system (cycle
/// inequalities over chordless base cycles, path and cut inequalities per
/// lifted-only edge). Must agree with the component route everywhere.
bool is_lifted_multicut_by_inequalities(const LiftedPair& pair, const Labeling& x);

/// Streams the characteristic vectors of all multicuts of G' lifted from G,
/// generated from base decompositions (one labeling per decomposition).
void for_each_lifted_multicut(const LiftedPair& pair, const std::function<bool(const Labeling&)>& fn);

/// Materialized variant, sorted by bit string (first canonical edge most
/// significant); each labeling appears exactly once.
std::vector<Labeling> enumerate_lifted_multicuts(const LiftedPair& pair);

/// Level of each lifted-only edge: the stage of the fixed-point hierarchy at
/// which a base path for it exists whose lifted-only chords all have smaller
/// level. Total on F for connected base graphs.
std::map<Edge, std::size_t> compute_levels(const LiftedPair& pair);

/// Feasible labeling with x_f = 0 and x_{f'} = 1 for every other lifted-only
/// f' of level >= level(f): zeroes one shortest base path for f (ties broken
/// by lexicographically smallest node sequence), cuts every base edge off the
/// path, and zeroes exactly the lifted-only edges with both endpoints on it.
Labeling f_feasible_labeling(const LiftedPair& pair, const Edge& f);

/// |E'| + 1 feasible labelings whose affine hull is full-dimensional: the
/// all-ones vector, one vector per base edge with only that edge uncut, and
/// one f-feasible vector per lifted-only edge in order of ascending level.
std::vector<Labeling> dimension_witness(const LiftedPair& pair);

} // namespace lmc
