#include "lmc/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace lmc {

std::vector<std::size_t> Decomposition::block_of(std::size_t node_count) const {
    std::vector<std::size_t> out(node_count, SIZE_MAX);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (NodeId u : blocks[b])
            out[u] = b;
    return out;
}

namespace {

Decomposition normalize(std::vector<std::vector<NodeId>> blocks) {
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return Decomposition{std::move(blocks)};
}

bool block_connected(const Graph& g, const std::vector<NodeId>& block) {
    if (block.empty())
        return false;
    std::vector<std::uint8_t> member(g.node_count(), 0);
    for (NodeId u : block)
        member[u] = 1;
    std::vector<std::uint8_t> seen(g.node_count(), 0);
    std::deque<NodeId> queue{block.front()};
    seen[block.front()] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId t : g.neighbors(u))
            if (member[t] && !seen[t]) {
                seen[t] = 1;
                ++reached;
                queue.push_back(t);
            }
    }
    return reached == block.size();
}

} // namespace

Decomposition make_decomposition(const Graph& g, std::vector<std::vector<NodeId>> blocks) {
    std::vector<std::uint8_t> covered(g.node_count(), 0);
    for (const auto& block : blocks) {
        if (block.empty())
            throw std::invalid_argument("decomposition contains an empty block");
        for (NodeId u : block) {
            if (u >= g.node_count())
                throw std::invalid_argument("block node " + std::to_string(u) + " exceeds node count");
            if (covered[u])
                throw std::invalid_argument("node " + std::to_string(u) + " appears in two blocks");
            covered[u] = 1;
        }
        if (!block_connected(g, block))
            throw std::invalid_argument("block containing node " + std::to_string(block.front()) +
                                        " does not induce a connected subgraph");
    }
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (!covered[u])
            throw std::invalid_argument("node " + std::to_string(u) + " is not covered by any block");
    return normalize(std::move(blocks));
}

EdgeSet decomposition_to_multicut(const Graph& g, const Decomposition& pi) {
    const auto block = pi.block_of(g.node_count());
    EdgeSet m;
    for (const Edge& e : g.edges())
        if (block[e.u] != block[e.v])
            m.push_back(e);
    return m;
}

Decomposition multicut_to_decomposition(const Graph& g, const EdgeSet& m) {
    const EdgeSet cut = sorted_edge_set(m);
    const auto label = component_labels(g, cut);
    for (const Edge& e : cut)
        if (label[e.u] == label[e.v]) {
            // witness path inside (V, E \ m)
            std::vector<NodeId> parent(g.node_count(), SIZE_MAX);
            std::deque<NodeId> queue{e.u};
            parent[e.u] = e.u;
            while (!queue.empty()) {
                const NodeId u = queue.front();
                queue.pop_front();
                for (NodeId t : g.neighbors(u))
                    if (parent[t] == SIZE_MAX && !edge_set_contains(cut, Edge(u, t))) {
                        parent[t] = u;
                        queue.push_back(t);
                    }
            }
            std::vector<NodeId> path;
            for (NodeId u = e.v; u != e.u; u = parent[u])
                path.push_back(u);
            path.push_back(e.u);
            std::reverse(path.begin(), path.end());
            throw NotAMulticutError(e, std::move(path));
        }
    std::size_t count = 0;
    for (std::size_t l : label)
        count = std::max(count, l + 1);
    std::vector<std::vector<NodeId>> blocks(count);
    for (NodeId u = 0; u < g.node_count(); ++u)
        blocks[label[u]].push_back(u);
    return normalize(std::move(blocks));
}

bool is_multicut(const Graph& g, const EdgeSet& m) {
    const EdgeSet cut = sorted_edge_set(m);
    const auto label = component_labels(g, cut);
    for (const Edge& e : cut)
        if (label[e.u] == label[e.v])
            return false;
    return true;
}

namespace {

bool cycle_system_holds(const std::vector<EdgeSet>& cycles, const EdgeSet& cut) {
    for (const EdgeSet& cycle : cycles) {
        std::size_t hits = 0;
        for (const Edge& e : cycle)
            if (edge_set_contains(cut, e))
                ++hits;
        if (hits == 1)
            return false;
    }
    return true;
}

} // namespace

bool is_multicut_by_cycles(const Graph& g, const EdgeSet& m) {
    return cycle_system_holds(enumerate_chordless_cycles(g), sorted_edge_set(m));
}

bool is_multicut_by_all_cycles(const Graph& g, const EdgeSet& m) {
    return cycle_system_holds(enumerate_cycles(g), sorted_edge_set(m));
}

namespace {

// Enumeration of all partitions into connected blocks. Each block is a
// connected subset containing the smallest node not yet assigned; connected
// subsets are enumerated once each by the include/ban discipline on the
// frontier.
class DecompositionEnumerator {
public:
    DecompositionEnumerator(const Graph& g, const std::function<bool(const Decomposition&)>& fn)
        : g_(g), fn_(fn), assigned_(g.node_count(), 0), banned_(g.node_count(), 0) {}

    void run() {
        stop_ = false;
        partition_level();
    }

private:
    void partition_level() {
        if (stop_)
            return;
        NodeId seed = g_.node_count();
        for (NodeId u = 0; u < g_.node_count(); ++u)
            if (!assigned_[u]) {
                seed = u;
                break;
            }
        if (seed == g_.node_count()) {
            if (!fn_(normalize(blocks_)))
                stop_ = true;
            return;
        }
        std::vector<NodeId> saved_current = std::move(current_);
        current_.assign(1, seed);
        assigned_[seed] = 1;
        std::vector<NodeId> frontier;
        for (NodeId t : g_.neighbors(seed))
            if (!assigned_[t] && !banned_[t])
                frontier.push_back(t);
        subset_level(frontier);
        assigned_[seed] = 0;
        current_ = std::move(saved_current);
    }

    // Emits `current_` as a block, then extends it by each frontier node in
    // turn, banning the node afterwards so no subset repeats. Bans are local
    // to the growth of one block; the recursion into the remaining nodes
    // runs with a clean ban set.
    void subset_level(std::vector<NodeId> frontier) {
        if (stop_)
            return;
        blocks_.push_back(current_);
        std::vector<std::uint8_t> saved_bans;
        saved_bans.swap(banned_);
        banned_.assign(g_.node_count(), 0);
        partition_level();
        banned_.swap(saved_bans);
        blocks_.pop_back();
        std::vector<NodeId> banned_here;
        while (!frontier.empty() && !stop_) {
            const NodeId x = frontier.back();
            frontier.pop_back();
            if (assigned_[x] || banned_[x])
                continue;
            std::vector<NodeId> extended = frontier;
            for (NodeId t : g_.neighbors(x))
                if (!assigned_[t] && !banned_[t] && t != x)
                    extended.push_back(t);
            current_.push_back(x);
            assigned_[x] = 1;
            subset_level(std::move(extended));
            assigned_[x] = 0;
            current_.pop_back();
            banned_[x] = 1;
            banned_here.push_back(x);
        }
        for (NodeId x : banned_here)
            banned_[x] = 0;
    }

    const Graph& g_;
    const std::function<bool(const Decomposition&)>& fn_;
    std::vector<std::uint8_t> assigned_;
    std::vector<std::uint8_t> banned_;
    std::vector<NodeId> current_;
    std::vector<std::vector<NodeId>> blocks_;
    bool stop_ = false;
};

} // namespace

void for_each_decomposition(const Graph& g, const std::function<bool(const Decomposition&)>& fn) {
    DecompositionEnumerator(g, fn).run();
}

std::vector<Decomposition> enumerate_decompositions(const Graph& g) {
    std::vector<Decomposition> out;
    for_each_decomposition(g, [&](const Decomposition& pi) {
        out.push_back(pi);
        return true;
    });
    return out;
}

std::vector<EdgeSet> enumerate_multicuts(const Graph& g) {
    std::vector<EdgeSet> out;
    for_each_decomposition(g, [&](const Decomposition& pi) {
        out.push_back(decomposition_to_multicut(g, pi));
        return true;
    });
    return out;
}

EquivalenceRelation::EquivalenceRelation(std::vector<NodeId> representative)
    : repr_(std::move(representative)) {
    for (NodeId a = 0; a < repr_.size(); ++a) {
        if (repr_[a] >= repr_.size() || repr_[repr_[a]] != repr_[a] || repr_[a] > a)
            throw std::invalid_argument("representatives must be canonical (smallest member of each class)");
    }
}

std::vector<std::vector<NodeId>> EquivalenceRelation::classes() const {
    std::vector<std::vector<NodeId>> out;
    std::vector<std::size_t> index(repr_.size(), SIZE_MAX);
    for (NodeId a = 0; a < repr_.size(); ++a) {
        if (index[repr_[a]] == SIZE_MAX) {
            index[repr_[a]] = out.size();
            out.push_back({});
        }
        out[index[repr_[a]]].push_back(a);
    }
    return out;
}

EquivalenceRelation multicut_to_equivalence(const Graph& g, const EdgeSet& m) {
    const std::size_t n = g.node_count();
    if (g.edge_count() != n * (n - 1) / 2)
        throw std::invalid_argument("equivalence view is defined for complete graphs only");
    if (!is_multicut(g, m))
        throw std::invalid_argument("edge set is not a multicut");
    const auto label = component_labels(g, sorted_edge_set(m));
    std::vector<NodeId> repr(n);
    std::vector<NodeId> first(n, n);
    for (NodeId u = 0; u < n; ++u) {
        if (first[label[u]] == n)
            first[label[u]] = u;
        repr[u] = first[label[u]];
    }
    return EquivalenceRelation(std::move(repr));
}

} // namespace lmc
