#include "lmc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

namespace lmc {

Graph::Graph(std::size_t node_count, EdgeSet edges) : node_count_(node_count) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.v >= node_count_)
            throw std::invalid_argument("edge " + e.str() + " exceeds node count " + std::to_string(node_count_));
        if (i > 0 && edges[i - 1] == e)
            throw std::invalid_argument("duplicate edge " + e.str());
    }
    edges_ = std::move(edges);
    adjacency_.assign(node_count_, {});
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u == v || u >= node_count_ || v >= node_count_)
        return false;
    const Edge e(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::string Path::str() const {
    std::string s;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i)
            s += "-";
        s += std::to_string(nodes[i]);
    }
    return s;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n < 2)
        return true;
    std::vector<std::uint8_t> seen(n, 0);
    std::deque<NodeId> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    return reached == n;
}

std::vector<std::size_t> component_labels(const Graph& g, const EdgeSet& removed) {
    const std::size_t n = g.node_count();
    const EdgeSet gone = sorted_edge_set(removed);
    std::vector<std::size_t> label(n, n);
    std::size_t next = 0;
    for (NodeId root = 0; root < n; ++root) {
        if (label[root] != n)
            continue;
        label[root] = next;
        std::deque<NodeId> queue{root};
        while (!queue.empty()) {
            const NodeId u = queue.front();
            queue.pop_front();
            for (NodeId w : g.neighbors(u)) {
                if (label[w] != n || edge_set_contains(gone, Edge(u, w)))
                    continue;
                label[w] = next;
                queue.push_back(w);
            }
        }
        ++next;
    }
    return label;
}

std::vector<std::size_t> component_labels(const Graph& g) {
    return component_labels(g, {});
}

namespace {

// All cycles through start using only nodes >= start; orientation deduped
// by requiring path[1] < path.back() at closing time.
void cycle_dfs(const Graph& g, NodeId start, std::vector<NodeId>& path,
               std::vector<std::uint8_t>& on_path, std::vector<EdgeSet>& out) {
    const NodeId u = path.back();
    for (NodeId t : g.neighbors(u)) {
        if (t == start) {
            if (path.size() >= 3 && path[1] < path.back()) {
                EdgeSet cycle;
                cycle.reserve(path.size());
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    cycle.emplace_back(path[i], path[i + 1]);
                cycle.emplace_back(path.back(), start);
                out.push_back(sorted_edge_set(std::move(cycle)));
            }
        } else if (t > start && !on_path[t]) {
            on_path[t] = 1;
            path.push_back(t);
            cycle_dfs(g, start, path, on_path, out);
            path.pop_back();
            on_path[t] = 0;
        }
    }
}

} // namespace

std::vector<EdgeSet> enumerate_cycles(const Graph& g) {
    std::vector<EdgeSet> out;
    std::vector<NodeId> path;
    std::vector<std::uint8_t> on_path(g.node_count(), 0);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        path.assign(1, s);
        on_path.assign(g.node_count(), 0);
        on_path[s] = 1;
        cycle_dfs(g, s, path, on_path, out);
    }
    return out;
}

bool is_chordless_in(const Graph& h, const EdgeSet& cycle) {
    std::vector<NodeId> nodes;
    for (const Edge& e : cycle) {
        nodes.push_back(e.u);
        nodes.push_back(e.v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const EdgeSet sorted = sorted_edge_set(cycle);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const Edge e(nodes[i], nodes[j]);
            if (h.has_edge(e) && !edge_set_contains(sorted, e))
                return false;
        }
    return true;
}

std::vector<EdgeSet> enumerate_chordless_cycles(const Graph& g) {
    std::vector<EdgeSet> out;
    for (EdgeSet& cycle : enumerate_cycles(g))
        if (is_chordless_in(g, cycle))
            out.push_back(std::move(cycle));
    return out;
}

namespace {

void path_dfs(const Graph& g, NodeId w, std::vector<NodeId>& nodes,
              std::vector<std::uint8_t>& on_path, std::vector<Path>& out) {
    const NodeId u = nodes.back();
    if (u == w) {
        Path p;
        p.nodes = nodes;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            p.edges.emplace_back(nodes[i], nodes[i + 1]);
        out.push_back(std::move(p));
        return;
    }
    for (NodeId t : g.neighbors(u)) {
        if (on_path[t])
            continue;
        on_path[t] = 1;
        nodes.push_back(t);
        path_dfs(g, w, nodes, on_path, out);
        nodes.pop_back();
        on_path[t] = 0;
    }
}

} // namespace

std::vector<Path> enumerate_vw_paths(const Graph& g, NodeId v, NodeId w) {
    if (v == w)
        throw std::invalid_argument("path query with v = w = " + std::to_string(v));
    std::vector<Path> out;
    std::vector<NodeId> nodes{v};
    std::vector<std::uint8_t> on_path(g.node_count(), 0);
    on_path[v] = 1;
    path_dfs(g, w, nodes, on_path, out);
    return out;
}

namespace {

bool mask_connected(const Graph& g, std::uint64_t mask) {
    if (mask == 0)
        return false;
    const int first = std::countr_zero(mask);
    std::uint64_t seen = std::uint64_t(1) << first;
    std::deque<NodeId> queue{static_cast<NodeId>(first)};
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId t : g.neighbors(u)) {
            const std::uint64_t bit = std::uint64_t(1) << t;
            if ((mask & bit) && !(seen & bit)) {
                seen |= bit;
                queue.push_back(t);
            }
        }
    }
    return seen == mask;
}

} // namespace

std::vector<EdgeSet> enumerate_vw_cuts(const Graph& g, NodeId v, NodeId w) {
    if (v == w)
        throw std::invalid_argument("cut query with v = w = " + std::to_string(v));
    if (!is_connected(g))
        throw std::invalid_argument("cut enumeration requires a connected graph");
    const std::size_t n = g.node_count();
    if (n > 26)
        throw std::invalid_argument("cut enumeration is limited to 26 nodes");
    std::vector<EdgeSet> out;
    const std::uint64_t all = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    const std::uint64_t vbit = std::uint64_t(1) << v;
    const std::uint64_t wbit = std::uint64_t(1) << w;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
        if (!(mask & vbit) || (mask & wbit))
            continue;
        if (!mask_connected(g, mask) || !mask_connected(g, all & ~mask))
            continue;
        EdgeSet cut;
        for (const Edge& e : g.edges()) {
            const bool a = mask & (std::uint64_t(1) << e.u);
            const bool b = mask & (std::uint64_t(1) << e.v);
            if (a != b)
                cut.push_back(e);
        }
        out.push_back(std::move(cut)); // already sorted: edges() is canonical
    }
    return out;
}

std::vector<NodeId> cut_vertices(const Graph& g, NodeId v, NodeId w) {
    if (!is_connected(g))
        throw std::invalid_argument("cut-vertex query requires a connected graph");
    const auto paths = enumerate_vw_paths(g, v, w);
    std::vector<std::uint8_t> on_all(g.node_count(), 1);
    std::vector<std::uint8_t> on_this(g.node_count(), 0);
    for (const Path& p : paths) {
        std::fill(on_this.begin(), on_this.end(), 0);
        for (NodeId u : p.nodes)
            on_this[u] = 1;
        for (NodeId u = 0; u < g.node_count(); ++u)
            on_all[u] = on_all[u] && on_this[u];
    }
    std::vector<NodeId> out;
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (on_all[u])
            out.push_back(u);
    return out;
}

std::optional<std::size_t> distance(const Graph& g, NodeId v, NodeId w) {
    std::vector<std::size_t> dist(g.node_count(), SIZE_MAX);
    std::deque<NodeId> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        if (u == w)
            return dist[u];
        for (NodeId t : g.neighbors(u))
            if (dist[t] == SIZE_MAX) {
                dist[t] = dist[u] + 1;
                queue.push_back(t);
            }
    }
    return std::nullopt;
}

Contraction contract_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e))
        throw std::invalid_argument("contract: edge " + e.str() + " not in graph");
    const std::size_t n = g.node_count();
    std::vector<NodeId> map(n);
    for (NodeId u = 0; u < n; ++u) {
        if (u == e.v)
            map[u] = e.u; // merged into the smaller endpoint
        else
            map[u] = u > e.v ? u - 1 : u;
    }
    // e.u keeps its id because e.u < e.v.
    EdgeSet edges;
    for (const Edge& f : g.edges()) {
        const NodeId a = map[f.u];
        const NodeId b = map[f.v];
        if (a != b)
            edges.emplace_back(a, b);
    }
    edges = sorted_edge_set(std::move(edges));
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Contraction{Graph(n - 1, std::move(edges)), std::move(map)};
}

bool edge_set_contains(const EdgeSet& sorted, const Edge& e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

EdgeSet sorted_edge_set(EdgeSet edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace lmc
