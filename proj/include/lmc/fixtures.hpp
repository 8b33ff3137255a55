#pragma once

#include "lmc/generators.hpp"
#include "lmc/json_io.hpp"

namespace lmc {
namespace fixtures {

/// Two-edge base path with one lifted edge closing the triangle; the
/// smallest pair whose lifted multicuts differ from the plain multicuts.
LiftedPair fig3();

/// Triangle with base = lifted graph (no lifted-only edges).
LiftedPair k3();

/// Four-node base path with lifted edges 0-2, 1-3 and 0-3; the level
/// function separates 0-3 from the other two.
LiftedPair fig4a();

/// Hexagon with lifted edges 0-2, 3-5 and 2-5.
LiftedPair fig4b();

/// 4-cycle base completed to K4.
LiftedPair c4k4();

/// 2x3 grid base with three seeded lifted edges.
LiftedPair grid23();

/// Triangle-closure instance with costs (-1, -1, 3) and its plain multicut
/// variant (base = lifted); the two have different optima.
Instance fig6_lifted();
Instance fig6_plain();

/// Cut-inequality counterexamples: pair, context edge and cut, plus the
/// condition the construction violates and the witness object where the
/// construction pins one down.
struct CutFixture {
    std::string name;
    LiftedPair pair;
    Edge f;
    EdgeSet cut;
    int violated_condition; // 1..5
    std::optional<Edge> c1_edge;
    std::optional<EdgeSet> c2_subset;
    std::optional<Edge> c3_f_prime;
    std::optional<EdgeSet> c3_subset;
    std::optional<std::size_t> c3_k;
    std::optional<std::vector<NodeId>> c4_path_nodes;
    std::optional<EdgeSet> c5_cycle;
};

CutFixture fig7(char letter); // 'a'..'k'
std::vector<CutFixture> fig7_all();

struct NamedPair {
    std::string name;
    LiftedPair pair;
};

/// The named pairs every sweep runs over.
std::vector<NamedPair> named_pairs();

/// Seeded random pairs with at most `max_nodes` nodes and at most
/// `max_lifted_edges` edges in the lifted graph.
std::vector<NamedPair> random_pairs(std::size_t count, std::uint64_t base_seed,
                                    std::size_t max_nodes = 6, std::size_t max_lifted_edges = 12);

/// Named pair lookup for the CLI (file path or fixture name).
std::optional<LiftedPair> by_name(const std::string& name);

} // namespace fixtures
} // namespace lmc
