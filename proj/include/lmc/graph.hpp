#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmc {

using NodeId = std::size_t;

/// Unordered node pair, stored normalized as (min, max). Loops are rejected.
struct Edge {
    NodeId u;
    NodeId v;

    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b)
            throw std::invalid_argument("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    auto operator<=>(const Edge&) const = default;

    bool incident(NodeId x) const { return u == x || v == x; }
    NodeId other(NodeId x) const { return u == x ? v : u; }
    std::string str() const { return std::to_string(u) + "-" + std::to_string(v); }
};

using EdgeSet = std::vector<Edge>; // kept sorted where noted

/// Finite simple undirected graph over nodes 0..n-1. Edges are held in
/// canonical order (lexicographic by endpoints); this order indexes every
/// vector and file format in the library.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t node_count, EdgeSet edges);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const EdgeSet& edges() const { return edges_; }
    const std::vector<NodeId>& neighbors(NodeId u) const { return adjacency_[u]; }

    bool has_edge(NodeId u, NodeId v) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    /// Position of e in the canonical edge order.
    std::optional<std::size_t> edge_index(const Edge& e) const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t node_count_ = 0;
    EdgeSet edges_;
    std::vector<std::vector<NodeId>> adjacency_;
};

/// Simple path between two nodes: node sequence plus the edges traversed.
struct Path {
    std::vector<NodeId> nodes;
    EdgeSet edges; // in traversal order

    NodeId front() const { return nodes.front(); }
    NodeId back() const { return nodes.back(); }
    std::string str() const;
};

// -- structural queries ------------------------------------------------

/// True iff every pair of nodes is joined by a path. Graphs with fewer than
/// two nodes are connected by convention.
bool is_connected(const Graph& g);

/// Connected-component labels, one per node. Component ids are assigned in
/// order of smallest member, so labels are deterministic.
std::vector<std::size_t> component_labels(const Graph& g, const EdgeSet& removed);
std::vector<std::size_t> component_labels(const Graph& g);

/// All cycles of g, each as a sorted edge set, each exactly once.
/// Exponential; intended for desk-scale graphs.
std::vector<EdgeSet> enumerate_cycles(const Graph& g);

/// Cycles of g without a chord in g.
std::vector<EdgeSet> enumerate_chordless_cycles(const Graph& g);

/// True iff no edge of h joins two nodes of the cycle other than the cycle
/// edges themselves. `cycle` must visit each of its nodes exactly once.
bool is_chordless_in(const Graph& h, const EdgeSet& cycle);

/// All simple v-w paths, in lexicographic order of the node sequence.
std::vector<Path> enumerate_vw_paths(const Graph& g, NodeId v, NodeId w);

/// All inclusion-minimal v-w cuts. Enumerates bipartitions (A, V\A) with
/// v in A, w outside, both sides connected; the crossing edges of such a
/// bipartition are exactly the minimal cuts. Requires g connected.
std::vector<EdgeSet> enumerate_vw_cuts(const Graph& g, NodeId v, NodeId w);

/// Nodes lying on every v-w path (includes v and w). Requires g connected.
std::vector<NodeId> cut_vertices(const Graph& g, NodeId v, NodeId w);

/// BFS distance, or nullopt if unreachable.
std::optional<std::size_t> distance(const Graph& g, NodeId v, NodeId w);

struct Contraction {
    Graph graph;
    std::vector<NodeId> node_map; // old id -> new id
};

/// Contract edge e: endpoints merged, parallel edges collapsed, loop removed.
/// The surviving node ids stay dense; the map records the relabeling.
Contraction contract_edge(const Graph& g, const Edge& e);

// Sorted-set helpers used throughout.
bool edge_set_contains(const EdgeSet& sorted, const Edge& e);
EdgeSet sorted_edge_set(EdgeSet edges);

} // namespace lmc
